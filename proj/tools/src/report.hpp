#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bgc/cohomology.hpp"
#include "bgc/flat_model.hpp"
#include "bgc/torus.hpp"
#include "json.hpp"

namespace bgc::cli {

using bgc::to_string;

enum class Format { Json, Csv, Text };
Format formatFromString(const std::string& s);
std::string to_string(Format f);

struct RunConfig {
  std::string command;
  std::string input;   // analyze
  std::string model;   // torus
  std::string output;  // empty: standard output
  Format format = Format::Json;
  std::vector<Theory> theories{Theory::BottChern, Theory::Aeppli, Theory::DPrime, Theory::DSecond, Theory::DeRham};
  Pair pair = Pair::PP;
  int radius = 2;
  std::string suite = "all";
  std::uint64_t seed = 1;
  int count = 50;
  bool injectFault = false;
  unsigned threads = 0;  // not part of the report: results do not depend on it
};

/// Invariant violations of the config itself (radius >= 0, count >= 1, ...).
std::vector<std::string> configProblems(const RunConfig& c);
nlohmann::ordered_json configJson(const RunConfig& c);

/// Table of one bigraded theory: rows p descending, columns q ascending.
/// Cells outside `hull` are blank (text: "."), cells inside print their dim.
std::string diamondText(const std::map<Bidegree, std::size_t>& dims, const std::map<Bidegree, std::size_t>& hull);
std::string diamondCsv(const std::map<Bidegree, std::size_t>& dims, const std::map<Bidegree, std::size_t>& hull);

std::string renderAnalysis(const ComplexAnalysis& a, const RunConfig& c);
std::string renderTorus(const TorusReport& r, const FlatBiGcModel& m, const RunConfig& c);

}  // namespace bgc::cli
