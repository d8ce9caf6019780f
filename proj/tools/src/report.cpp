#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "bgc/errors.hpp"
#include "bgc/version.hpp"

namespace bgc::cli {

using nlohmann::ordered_json;

Format formatFromString(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + s + "' (json, csv, text)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "json";
}

std::vector<std::string> configProblems(const RunConfig& c) {
  std::vector<std::string> out;
  if (c.radius < 0) out.push_back("mode-box radius must be >= 0");
  if (c.count < 1) out.push_back("count must be >= 1");
  if (c.theories.empty()) out.push_back("at least one theory is required");
  if (c.suite != "core" && c.suite != "geometry" && c.suite != "all")
    out.push_back("suite must be core, geometry or all");
  return out;
}

ordered_json configJson(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  if (c.command == "analyze") {
    j["input"] = c.input;
  } else if (c.command == "torus") {
    j["model"] = c.model;
    j["modeBox"] = c.radius;
    j["pair"] = to_string(c.pair);
    ordered_json th = ordered_json::array();
    for (Theory t : c.theories) th.push_back(to_string(t));
    j["theories"] = th;
  } else if (c.command == "verify") {
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    j["count"] = c.count;
    if (c.injectFault) j["injectFault"] = true;
  }
  j["format"] = to_string(c.format);
  j["output"] = c.output.empty() ? "-" : c.output;
  return j;
}

namespace {

struct Bounds {
  int pMin = 0, pMax = -1, qMin = 0, qMax = -1;
};

Bounds boundsOf(const std::map<Bidegree, std::size_t>& hull) {
  Bounds b;
  bool first = true;
  for (const auto& [at, d] : hull) {
    if (first) {
      b = {at.p, at.p, at.q, at.q};
      first = false;
    }
    b.pMin = std::min(b.pMin, at.p), b.pMax = std::max(b.pMax, at.p);
    b.qMin = std::min(b.qMin, at.q), b.qMax = std::max(b.qMax, at.q);
  }
  return b;
}

std::size_t lookup(const std::map<Bidegree, std::size_t>& m, Bidegree b) {
  auto it = m.find(b);
  return it == m.end() ? 0 : it->second;
}

ordered_json bigradedJson(const std::map<Bidegree, std::size_t>& dims) {
  ordered_json out = ordered_json::array();
  for (const auto& [b, d] : dims) out.push_back({{"p", b.p}, {"q", b.q}, {"dim", d}});
  return out;
}

ordered_json totalJson(const std::map<int, std::size_t>& dims, const char* key) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, d] : dims) out.push_back({{key, k}, {"dim", d}});
  return out;
}

ordered_json header(const RunConfig& c) {
  ordered_json j;
  j["tool"] = {{"name", "bgc"}, {"version", kVersion}};
  j["config"] = configJson(c);
  return j;
}

std::string textHeader(const RunConfig& c) {
  std::ostringstream os;
  os << "bgc " << kVersion << " " << c.command << "\n";
  os << "config: " << configJson(c).dump() << "\n";
  return os.str();
}

ordered_json mapJson(const InducedMap& m) {
  return {{"sourceDim", m.sourceDim}, {"targetDim", m.targetDim}, {"rank", m.rank}, {"injective", m.injective},
          {"surjective", m.surjective}};
}

std::map<Bidegree, std::size_t> nonzero(const std::map<Bidegree, std::size_t>& m) {
  std::map<Bidegree, std::size_t> out;
  for (const auto& [b, d] : m)
    if (d) out[b] = d;
  return out;
}

}  // namespace

std::string diamondText(const std::map<Bidegree, std::size_t>& dims, const std::map<Bidegree, std::size_t>& hull) {
  const Bounds b = boundsOf(hull);
  std::ostringstream os;
  os << "  p\\q";
  for (int q = b.qMin; q <= b.qMax; ++q) os << (q < 0 ? " " : "  ") << q;
  os << "\n";
  for (int p = b.pMax; p >= b.pMin; --p) {
    os << (p < 0 ? "   " : "    ") << p;
    for (int q = b.qMin; q <= b.qMax; ++q) {
      os << "  ";
      if (hull.count({p, q}))
        os << lookup(dims, {p, q});
      else
        os << ".";
    }
    os << "\n";
  }
  return os.str();
}

std::string diamondCsv(const std::map<Bidegree, std::size_t>& dims, const std::map<Bidegree, std::size_t>& hull) {
  const Bounds b = boundsOf(hull);
  std::ostringstream os;
  os << "p\\q";
  for (int q = b.qMin; q <= b.qMax; ++q) os << "," << q;
  os << "\n";
  for (int p = b.pMax; p >= b.pMin; --p) {
    os << p;
    for (int q = b.qMin; q <= b.qMax; ++q) {
      os << ",";
      if (hull.count({p, q})) os << lookup(dims, {p, q});
    }
    os << "\n";
  }
  return os.str();
}

std::string renderAnalysis(const ComplexAnalysis& a, const RunConfig& c) {
  const DoubleComplex& cx = a.complex();
  const CohomologyReport dr = a.deRham(), bc = a.bottChern(), ae = a.aeppli(), d1 = a.dPrimeCohomology(),
                         d2 = a.dSecondCohomology();
  const std::vector<const CohomologyReport*> bigraded{&bc, &ae, &d1, &d2};
  const LatticeInvariants lat = a.lattice();
  const NaturalMaps maps = a.naturalMaps();
  const TheoremEquivalences th = a.theoremEquivalences();

  if (c.format == Format::Csv) {
    std::ostringstream os;
    for (const auto* r : bigraded) os << "theory," << to_string(r->theory) << "\n" << diamondCsv(r->dims, cx.support()) << "\n";
    os << "theory,derham\nk,dim\n";
    for (const auto& [k, d] : dr.totalDims) os << k << "," << d << "\n";
    return os.str();
  }

  if (c.format == Format::Text) {
    std::ostringstream os;
    os << textHeader(c);
    os << "support: " << cx.support().size() << " slices, total dim " << cx.totalDim() << "\n\n";
    for (const auto* r : bigraded) os << "h_" << to_string(r->theory) << ":\n" << diamondText(r->dims, cx.support()) << "\n";
    os << "b^k:";
    for (const auto& [k, d] : dr.totalDims) os << " " << k << ":" << d;
    os << "\n\nd'd''-lemma:";
    bool any = false;
    for (const auto& [b, d] : cx.support())
      if (!a.lemmaAt(b)) os << " fails at " << to_string(b), any = true;
    if (!any) os << " holds everywhere";
    os << "\n";
    os << "theorem: (1) " << th.lemmaEverywhere << " (2) " << th.bcMatchesRowColumn << " (3) " << th.aeppliMatchesRowColumn
       << " (4) " << th.bcMatchesDeRham << " (5) " << th.aeppliMatchesDeRham << "  consistent " << th.consistent() << "\n";
    auto badMaps = [&](const char* name, const std::map<Bidegree, InducedMap>& m) {
      for (const auto& [b, x] : m)
        if (!x.bijective())
          os << "  " << name << to_string(b) << (x.injective ? "" : " not injective") << (x.surjective ? "" : " not surjective")
             << "\n";
    };
    os << "non-bijective maps:\n";
    badMaps("phi", maps.phi);
    badMaps("phi+", maps.phiPlus);
    badMaps("phi-", maps.phiMinus);
    badMaps("psi+", maps.psiPlus);
    badMaps("psi-", maps.psiMinus);
    for (const auto& [k, x] : maps.phiTotal)
      if (!x.bijective()) os << "  phi^" << k << (x.injective ? "" : " not injective") << (x.surjective ? "" : " not surjective") << "\n";
    for (const auto& [k, x] : maps.psiTotal)
      if (!x.bijective()) os << "  psi^" << k << (x.injective ? "" : " not injective") << (x.surjective ? "" : " not surjective") << "\n";
    return os.str();
  }

  ordered_json doc = header(c);
  ordered_json sup = ordered_json::array();
  for (const auto& [b, d] : cx.support()) sup.push_back({{"p", b.p}, {"q", b.q}, {"dim", d}});
  doc["complex"] = {{"support", sup}, {"totalDim", cx.totalDim()}};
  ordered_json coh;
  for (const auto* r : bigraded) coh[to_string(r->theory)] = bigradedJson(r->dims);
  coh["derham"] = totalJson(dr.totalDims, "k");
  doc["cohomology"] = coh;

  ordered_json lj = ordered_json::array();
  for (const auto& [b, e] : lat)
    lj.push_back({{"p", b.p}, {"q", b.q}, {"p0", e.p0}, {"pPlus", e.pPlus}, {"pMinus", e.pMinus}, {"sPlus", e.sPlus},
                  {"sMinus", e.sMinus}, {"s0", e.s0}, {"u0", e.u0}, {"uPlus", e.uPlus}, {"uMinus", e.uMinus},
                  {"vPlus", e.vPlus}, {"vMinus", e.vMinus}, {"v0", e.v0}});
  doc["lattice"] = lj;

  ordered_json lemma = ordered_json::array();
  for (const auto& [b, d] : cx.support()) lemma.push_back({{"p", b.p}, {"q", b.q}, {"holds", a.lemmaAt(b)}});
  doc["lemma"] = {{"everywhere", th.lemmaEverywhere}, {"at", lemma}};

  auto bigradedMaps = [](const std::map<Bidegree, InducedMap>& m) {
    ordered_json out = ordered_json::array();
    for (const auto& [b, x] : m) {
      ordered_json e = {{"p", b.p}, {"q", b.q}};
      e.update(mapJson(x));
      out.push_back(e);
    }
    return out;
  };
  auto totalMaps = [](const std::map<int, InducedMap>& m) {
    ordered_json out = ordered_json::array();
    for (const auto& [k, x] : m) {
      ordered_json e = {{"k", k}};
      e.update(mapJson(x));
      out.push_back(e);
    }
    return out;
  };
  doc["maps"] = {{"phi", bigradedMaps(maps.phi)},           {"phiPlus", bigradedMaps(maps.phiPlus)},
                 {"phiMinus", bigradedMaps(maps.phiMinus)}, {"psiPlus", bigradedMaps(maps.psiPlus)},
                 {"psiMinus", bigradedMaps(maps.psiMinus)}, {"phiTotal", totalMaps(maps.phiTotal)},
                 {"psiTotal", totalMaps(maps.psiTotal)}};
  doc["theorem"] = {{"lemmaEverywhere", th.lemmaEverywhere},
                    {"bcMatchesRowColumn", th.bcMatchesRowColumn},
                    {"aeppliMatchesRowColumn", th.aeppliMatchesRowColumn},
                    {"bcMatchesDeRham", th.bcMatchesDeRham},
                    {"aeppliMatchesDeRham", th.aeppliMatchesDeRham},
                    {"consistent", th.consistent()}};
  return doc.dump(2) + "\n";
}

std::string renderTorus(const TorusReport& r, const FlatBiGcModel& m, const RunConfig& c) {
  auto theoryName = [&](Theory t) {
    const auto ops = pairOperators(r.pair);
    switch (t) {
      case Theory::BottChern: return "BC," + to_string(ops[0]) + to_string(ops[1]);
      case Theory::Aeppli: return "A," + to_string(ops[0]) + to_string(ops[1]);
      case Theory::DPrime: return to_string(ops[0]);
      case Theory::DSecond: return to_string(ops[1]);
      case Theory::DeRham: return std::string("d");
    }
    return std::string();
  };

  if (c.format == Format::Csv) {
    std::ostringstream os;
    for (Theory t : r.theories) {
      if (t == Theory::DeRham) continue;
      os << "theory," << to_string(t) << "," << theoryName(t) << "\n" << diamondCsv(r.dims.at(t), r.sliceDims) << "\n";
    }
    if (std::count(r.theories.begin(), r.theories.end(), Theory::DeRham)) {
      os << "theory,derham\nlabel,dim\n";
      for (const auto& [k, d] : r.deRham) os << k << "," << d << "\n";
    }
    return os.str();
  }

  if (c.format == Format::Text) {
    std::ostringstream os;
    os << textHeader(c);
    os << "model: " << r.label << " (n=" << r.n << ", generalized Kahler: " << (isGeneralizedKahler(m) ? "yes" : "no")
       << ")\n";
    os << "modes swept: " << r.modesSwept << " (radius " << r.radius << "), nonzero modes contributing: "
       << r.contributingNonzeroModes.size() << ", complete: " << (r.complete() ? "yes" : "no") << "\n\n";
    os << "dim U^{p,q}:\n" << diamondText(r.sliceDims, r.sliceDims) << "\n";
    for (Theory t : r.theories) {
      if (t == Theory::DeRham) continue;
      os << "h_{" << theoryName(t) << "}:\n" << diamondText(r.dims.at(t), r.sliceDims) << "\n";
    }
    if (std::count(r.theories.begin(), r.theories.end(), Theory::DeRham)) {
      os << "h_d by label:";
      for (const auto& [k, d] : r.deRham) os << " " << k << ":" << d;
      os << "\n";
    }
    for (const Mode& k : r.contributingNonzeroModes) os << "nonzero mode contributes: " << to_string(k) << "\n";
    return os.str();
  }

  ordered_json doc = header(c);
  doc["model"] = {{"label", r.label}, {"n", r.n}, {"generalizedKahler", isGeneralizedKahler(m)},
                  {"metric", m.metricFromProduct ? "-J1J2" : "given"}};
  doc["slices"] = bigradedJson(r.sliceDims);
  doc["modeBox"] = {{"radius", r.radius}, {"modesSwept", r.modesSwept}};
  ordered_json th;
  for (Theory t : r.theories) {
    if (t == Theory::DeRham)
      th["derham"] = {{"name", "d"}, {"byLabel", totalJson(r.deRham, "label")}};
    else
      th[to_string(t)] = {{"name", theoryName(t)}, {"dims", bigradedJson(nonzero(r.dims.at(t)))}};
  }
  doc["theories"] = th;
  ordered_json bd = ordered_json::array();
  for (const auto& mc : r.breakdown) {
    ordered_json e;
    e["k"] = mc.k;
    for (const auto& [t, dims] : mc.dims) e[to_string(t)] = bigradedJson(nonzero(dims));
    if (!mc.deRham.empty()) e["derham"] = totalJson(mc.deRham, "label");
    bd.push_back(e);
  }
  doc["breakdown"] = bd;
  ordered_json nz = ordered_json::array();
  for (const Mode& k : r.contributingNonzeroModes) nz.push_back(k);
  doc["nonzeroModeContributed"] = r.nonzeroModeContributed();
  doc["contributingNonzeroModes"] = nz;
  doc["complete"] = r.complete();
  return doc.dump(2) + "\n";
}

}  // namespace bgc::cli
