#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ut3/chain.hpp"

// JSON encodings of the library's values. Group elements are keyed as
// "a,b,c"; complex numbers are [re, im]; irrep blocks are keyed by the
// 1-based table column.

namespace ut3::json {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json encode(Cyclotomic x) { return Json{{"one", x.one()}, {"omega", x.omega()}}; }

inline Cyclotomic decode_cyclotomic(const Json& j) {
  if (!j.is_object() || !j.contains("one") || !j.contains("omega"))
    throw FormatError("cyclotomic value must be {\"one\": m, \"omega\": n}");
  return {j.at("one").get<Cyclotomic::Int>(), j.at("omega").get<Cyclotomic::Int>()};
}

inline Json encode(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex decode_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("complex value must be [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json encode(GroupElement g) { return Json::array({g.a(), g.b(), g.c()}); }

inline GroupElement parse_key(const std::string& key) {
  int a = -1, b = -1, c = -1;
  char s1 = 0, s2 = 0;
  std::istringstream in(key);
  if (!(in >> a >> s1 >> b >> s2 >> c) || s1 != ',' || s2 != ',' || !in.eof() || a < 0 || a > 2 || b < 0 ||
      b > 2 || c < 0 || c > 2)
    throw FormatError("group element key must be \"a,b,c\" with entries in 0..2, got \"" + key + "\"");
  return {a, b, c};
}

inline Json encode(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(encode(Complex(m(i, k))));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix decode_matrix(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw FormatError("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw FormatError("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = decode_complex(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

inline Json encode(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(Complex(v(i))));
  return out;
}

inline Json encode(const RepType& t) { return Json(t.multiplicities()); }

inline RepType decode_rep_type(const Json& j) {
  if (!j.is_array() || j.size() != kNumIrreps) throw FormatError("type must be a list of 11 multiplicities");
  RepType::Multiplicities m{};
  for (std::size_t i = 0; i < kNumIrreps; ++i) {
    if (!j[i].is_number_integer() || j[i].get<int>() < 0)
      throw FormatError("multiplicities must be non-negative integers");
    m[i] = j[i].get<int>();
  }
  return RepType(m);
}

/// Reads the "a,b,c" object of a per-element table, requiring all 27 keys.
template <typename Decode>
auto decode_table(const Json& j, const char* what, Decode&& decode) {
  using Value = decltype(decode(j));
  if (!j.is_object()) throw FormatError(std::string(what) + " must be an object keyed by \"a,b,c\"");
  std::array<Value, GroupElement::kOrder> out;
  std::array<bool, GroupElement::kOrder> seen{};
  for (const auto& [key, value] : j.items()) {
    const GroupElement g = parse_key(key);
    out[g.index()] = decode(value);
    seen[g.index()] = true;
  }
  for (GroupElement g : elements())
    if (!seen[g.index()]) throw FormatError(std::string(what) + " is missing key \"" + g.key() + "\"");
  return out;
}

// {"dimension": d, "matrices": {"a,b,c": [[[re,im],...],...], ...}}
inline Json encode(const MatrixRep& rep) {
  Json matrices = Json::object();
  for (GroupElement g : elements()) matrices[g.key()] = encode(rep(g));
  return Json{{"dimension", rep.dimension()}, {"matrices", std::move(matrices)}};
}

inline MatrixRep decode_matrix_rep(const Json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("matrices"))
    throw FormatError("representation must have \"dimension\" and \"matrices\"");
  if (!j.at("dimension").is_number_integer() || j.at("dimension").get<int>() <= 0)
    throw FormatError("dimension must be a positive integer");
  const int d = j.at("dimension").get<int>();
  return MatrixRep(d, decode_table(j.at("matrices"), "matrices", [d](const Json& m) { return decode_matrix(m, d, d); }));
}

// {"fiber_type": [m1..m11], "values": {"a,b,c": [[re,im],...], ...}}
inline Json encode(const FeatureMap& f) {
  Json values = Json::object();
  for (GroupElement g : elements()) values[g.key()] = encode(f(g));
  return Json{{"fiber_type", encode(f.fiber_type())}, {"values", std::move(values)}};
}

inline FeatureMap decode_feature_map(const Json& j) {
  if (!j.is_object() || !j.contains("fiber_type") || !j.contains("values"))
    throw FormatError("feature map must have \"fiber_type\" and \"values\"");
  RepType type = decode_rep_type(j.at("fiber_type"));
  const int d = type.dimension();
  auto values = decode_table(j.at("values"), "values", [d](const Json& v) -> Vector {
    if (!v.is_array() || static_cast<int>(v.size()) != d)
      throw FormatError("feature vectors must have length " + std::to_string(d));
    Vector out(d);
    for (int i = 0; i < d; ++i) out(i) = decode_complex(v[static_cast<std::size_t>(i)]);
    return out;
  });
  return FeatureMap(std::move(type), std::move(values));
}

// {"in_type": [...], "out_type": [...], "blocks": {"i": {"a,b,c": [[[re,im],...],...]}}}
inline Json encode(const EquivariantFilter& f) {
  Json blocks = Json::object();
  for (const auto& [pos, table] : f.blocks()) {
    Json per_element = Json::object();
    for (GroupElement g : elements()) per_element[g.key()] = encode(table[g.index()]);
    blocks[std::to_string(pos + 1)] = std::move(per_element);
  }
  return Json{{"in_type", encode(f.in_type())}, {"out_type", encode(f.out_type())}, {"blocks", std::move(blocks)}};
}

inline EquivariantFilter decode_filter(const Json& j) {
  if (!j.is_object() || !j.contains("in_type") || !j.contains("out_type") || !j.contains("blocks"))
    throw FormatError("filter must have \"in_type\", \"out_type\" and \"blocks\"");
  const RepType in = decode_rep_type(j.at("in_type"));
  const RepType out = decode_rep_type(j.at("out_type"));
  const Json& blocks = j.at("blocks");
  if (!blocks.is_object()) throw FormatError("\"blocks\" must be an object keyed by irrep number");
  EquivariantFilter::Blocks params;
  for (const auto& [key, table] : blocks.items()) {
    const auto label = IrrepLabel::parse(key);
    if (!label) throw FormatError("unknown irrep block key \"" + key + "\"");
    const std::size_t pos = label->position();
    const int rows = out[pos];
    const int cols = in[pos];
    if (rows == 0 || cols == 0) throw FormatError("block \"" + key + "\" is not shared by both types");
    params.emplace(pos, decode_table(table, "block", [rows, cols](const Json& m) { return decode_matrix(m, rows, cols); }));
  }
  try {
    return build_filter(std::move(params), in, out);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what() + " (byte " + std::to_string(e.byte) + ")");
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_text(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace ut3::json
