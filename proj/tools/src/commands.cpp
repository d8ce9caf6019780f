#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bgc/errors.hpp"
#include "bgc/io.hpp"
#include "bgc/version.hpp"
#include "verify.hpp"

namespace bgc::cli {

namespace {

int emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
  if (c.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write '" << c.output << "'\n";
    return kValidationFailure;
  }
  return kOk;
}

int badConfig(const RunConfig& c, std::ostream& err) {
  const auto problems = configProblems(c);
  for (const auto& p : problems) err << "invalid option: " << p << "\n";
  return problems.empty() ? kOk : kValidationFailure;
}

}  // namespace

int runAnalyze(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (int rc = badConfig(c, err)) return rc;
  DoubleComplex cx;
  try {
    cx = parseComplex(readFile(c.input));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const auto violations = validate(cx);
  if (!violations.empty()) {
    err << "validation failed (" << violations.size() << " violations):\n";
    for (const auto& v : violations) err << "  " << v.message << "\n";
    return kValidationFailure;
  }
  return emit(c, renderAnalysis(ComplexAnalysis(std::move(cx)), c), out, err);
}

int runTorus(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (int rc = badConfig(c, err)) return rc;
  FlatBiGcModel m;
  try {
    m = parseModel(readFile(c.model));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const auto violations = validateModel(m);
  if (!violations.empty()) {
    err << "model validation failed (" << violations.size() << " violations):\n";
    for (const auto& v : violations) err << "  " << v.identity << ": " << v.message << "\n";
    return kValidationFailure;
  }
  try {
    const FlatGeometry g(m);
    const TorusReport r = torusCohomology(g, c.theories, c.pair, c.radius, c.threads);
    return emit(c, renderTorus(r, m, c), out, err);
  } catch (const Error& e) {
    // e.g. a metric whose V+ has no orthonormal basis over Q(i)
    err << "model rejected: " << e.what() << "\n";
    return kValidationFailure;
  }
}

int runVerify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (int rc = badConfig(c, err)) return rc;
  SuiteOptions o;
  o.seed = c.seed;
  o.count = c.count;
  o.injectFault = c.injectFault;
  SuiteResult all;
  if (c.suite == "core" || c.suite == "all") {
    SuiteResult r = runCoreSuite(o);
    all.properties.insert(all.properties.end(), r.properties.begin(), r.properties.end());
    all.diagnostics.insert(all.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
  }
  if (c.suite == "geometry" || c.suite == "all") {
    SuiteResult r = runGeometrySuite(o);
    all.properties.insert(all.properties.end(), r.properties.begin(), r.properties.end());
    all.diagnostics.insert(all.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
  }

  std::ostringstream os;
  std::size_t failing = 0;
  if (c.format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["tool"] = {{"name", "bgc"}, {"version", kVersion}};
    doc["config"] = configJson(c);
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto& p : all.properties) {
      failing += !p.ok();
      props.push_back({{"name", p.name}, {"passed", p.passed}, {"total", p.total}, {"failures", p.failures}});
    }
    doc["properties"] = props;
    nlohmann::ordered_json diags = nlohmann::ordered_json::array();
    for (const auto& d : all.diagnostics) diags.push_back({{"name", d.name}, {"detail", d.detail}});
    doc["diagnostics"] = diags;
    doc["failing"] = failing;
    os << doc.dump(2) << "\n";
  } else {
    os << "bgc " << kVersion << " verify\n";
    os << "config: " << configJson(c).dump() << "\n";
    std::size_t width = 0;
    for (const auto& p : all.properties) width = std::max(width, p.name.size());
    for (const auto& p : all.properties) {
      failing += !p.ok();
      os << (p.ok() ? "pass  " : "FAIL  ") << p.name << std::string(width + 2 - p.name.size(), ' ') << p.passed << "/"
         << p.total << "\n";
      for (const auto& f : p.failures) os << "        " << f << "\n";
    }
    for (const auto& d : all.diagnostics) os << "note  " << d.name << ": " << d.detail << "\n";
    os << "summary: " << all.properties.size() << " properties, " << failing << " failing\n";
  }
  if (int rc = emit(c, os.str(), out, err)) return rc;
  if (all.validationFailed()) return kValidationFailure;
  return all.propertyFailed() ? kPropertyFailure : kOk;
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bott-Chern/Aeppli cohomology of double complexes and flat bi-generalized Hermitian models", "bgc"};
  app.set_version_flag("--version", std::string("bgc ") + kVersion);
  app.require_subcommand(1);

  RunConfig c;
  std::string format, pair = "pp", theories;

  auto* analyze = app.add_subcommand("analyze", "cohomology report for a double complex (JSON input)");
  analyze->add_option("--input", c.input, "complex file")->required();
  analyze->add_option("--output", c.output, "report file (default: stdout)");
  analyze->add_option("--format", format, "json | csv | text");

  auto* torus = app.add_subcommand("torus", "torus cohomology tables of a flat model (JSON input)");
  torus->add_option("--model", c.model, "model file")->required();
  torus->add_option("--mode-box", c.radius, "sweep k in {-R..R}^{2n}")->capture_default_str();
  torus->add_option("--theories", theories, "comma list of bc,aeppli,dprime,dsecond,derham");
  torus->add_option("--pair", pair, "pp | pb | bp | bb")->capture_default_str();
  torus->add_option("--output", c.output, "report file (default: stdout)");
  torus->add_option("--format", format, "json | csv | text");
  torus->add_option("--threads", c.threads, "worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "property suite over generated complexes and the flat models");
  verify->add_option("--suite", c.suite, "core | geometry | all")->capture_default_str();
  verify->add_option("--seed", c.seed, "generator seed")->capture_default_str();
  verify->add_option("--count", c.count, "instances per suite")->capture_default_str();
  verify->add_option("--output", c.output, "summary file (default: stdout)");
  verify->add_option("--format", format, "text | json");
  verify->add_flag("--inject-fault", c.injectFault, "corrupt one generated complex on purpose");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << "bgc " << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kParseError;
  }

  try {
    if (analyze->parsed()) c.command = "analyze";
    if (torus->parsed()) c.command = "torus";
    if (verify->parsed()) c.command = "verify";
    c.format = format.empty() ? (c.command == "verify" ? Format::Text : Format::Json) : formatFromString(format);
    c.pair = pairFromString(pair);
    if (!theories.empty()) {
      c.theories.clear();
      std::istringstream is(theories);
      for (std::string t; std::getline(is, t, ',');)
        if (!t.empty()) c.theories.push_back(theoryFromString(t));
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kParseError;
  }

  if (c.command == "analyze") return runAnalyze(c, out, err);
  if (c.command == "torus") return runTorus(c, out, err);
  return runVerify(c, out, err);
}

}  // namespace bgc::cli
