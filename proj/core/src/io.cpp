#include "bgc/io.hpp"

#include <fstream>
#include <sstream>

#include "bgc/errors.hpp"
#include "json.hpp"

namespace bgc {

using nlohmann::json;

namespace {

json parseDocument(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

int intField(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

Scalar scalarOf(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": scalar must be a string literal or an integer");
}

Matrix matrixOf(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": matrix must be an array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array()) throw ParseError(where + ": row " + std::to_string(r) + " is not an array");
    if (r == 0) cols = v[r].size();
    if (v[r].size() != cols) throw ParseError(where + ": ragged rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalarOf(v[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  return m;
}

json matrixJson(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).toString());
    rows.push_back(std::move(row));
  }
  return rows;
}

void readMaps(const json& doc, const char* key, DoubleComplex& c, bool prime) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::size_t i = 0;
  for (const json& e : *it) {
    const std::string where = std::string(key) + "[" + std::to_string(i++) + "]";
    const Bidegree b{intField(e, "p", where), intField(e, "q", where)};
    Matrix m = matrixOf(field(e, "matrix", where), where + ".matrix");
    const auto& stored = prime ? c.storedDPrime() : c.storedDSecond();
    if (stored.count(b)) throw ParseError(where + ": duplicate map at " + to_string(b));
    if (prime)
      c.setDPrime(b, std::move(m));
    else
      c.setDSecond(b, std::move(m));
  }
}

}  // namespace

DoubleComplex parseComplex(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_object()) throw ParseError("complex document must be an object");
  DoubleComplex c;
  const json& spaces = field(doc, "spaces", "complex");
  if (!spaces.is_array()) throw ParseError("\"spaces\" must be an array");
  std::size_t i = 0;
  for (const json& s : spaces) {
    const std::string where = "spaces[" + std::to_string(i++) + "]";
    const Bidegree b{intField(s, "p", where), intField(s, "q", where)};
    const int dim = intField(s, "dim", where);
    if (dim < 0) throw ParseError(where + ": negative dimension");
    if (c.dim(b) != 0) throw ParseError(where + ": duplicate space at " + to_string(b));
    c.setSpace(b, static_cast<std::size_t>(dim));
  }
  readMaps(doc, "dprime", c, true);
  readMaps(doc, "dsecond", c, false);
  return c;
}

std::string complexToJson(const DoubleComplex& c) {
  json doc;
  doc["spaces"] = json::array();
  for (const auto& [b, d] : c.support()) doc["spaces"].push_back({{"p", b.p}, {"q", b.q}, {"dim", d}});
  auto maps = [](const std::map<Bidegree, Matrix>& m) {
    json out = json::array();
    for (const auto& [b, x] : m) out.push_back({{"p", b.p}, {"q", b.q}, {"matrix", matrixJson(x)}});
    return out;
  };
  doc["dprime"] = maps(c.storedDPrime());
  doc["dsecond"] = maps(c.storedDSecond());
  return doc.dump(2) + "\n";
}

FlatBiGcModel parseModel(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_object()) throw ParseError("model document must be an object");
  FlatBiGcModel m;
  m.n = intField(doc, "n", "model");
  if (m.n < 1 || m.n > 3) throw ParseError("model: n must be 1, 2 or 3");
  m.j1 = matrixOf(field(doc, "J1", "model"), "J1");
  m.j2 = matrixOf(field(doc, "J2", "model"), "J2");
  const json& g = field(doc, "G", "model");
  if (g.is_string()) {
    if (g.get<std::string>() != "auto:-J1J2") throw ParseError("model: G must be a matrix or \"auto:-J1J2\"");
    if (m.j1.cols() != m.j2.rows()) throw ParseError("model: J1 and J2 shapes do not compose");
    m.g = -(m.j1 * m.j2);
    m.metricFromProduct = true;
  } else {
    m.g = matrixOf(g, "G");
  }
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("model: label must be a string");
    m.label = it->get<std::string>();
  }
  return m;
}

std::string modelToJson(const FlatBiGcModel& m) {
  json doc;
  doc["n"] = m.n;
  doc["J1"] = matrixJson(m.j1);
  doc["J2"] = matrixJson(m.j2);
  doc["G"] = m.metricFromProduct ? json("auto:-J1J2") : matrixJson(m.g);
  doc["label"] = m.label;
  return doc.dump(2) + "\n";
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace bgc
