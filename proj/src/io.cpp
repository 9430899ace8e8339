#include "lpcoh/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace {

using nlohmann::json;

Rational entry_value(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "rational values must be \"p\" or \"p/q\" strings");
  return parse_rational(v.get<std::string>());
}

Index entry_index(const json& v, Index bound, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "index must be an integer");
  const auto i = v.get<long long>();
  if (i < 0 || i >= bound)
    throw ParseError(where, "index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(bound) + ")");
  return static_cast<Index>(i);
}

Index read_dim(const json& obj, const std::string& where) {
  if (!obj.contains("dim") || !obj.at("dim").is_number_integer() || obj.at("dim").get<long long>() < 0)
    throw ParseError(where, "missing or negative \"dim\"");
  return static_cast<Index>(obj.at("dim").get<long long>());
}

// Entries [outer, row, col, "value"] into one matrix per outer index.
std::vector<MatQ> read_indexed_matrices(const json& arr, Index outer, Index rows, Index cols,
                                        const std::string& where) {
  std::vector<MatQ> out(static_cast<size_t>(outer), MatQ::Zero(rows, cols));
  if (arr.is_null()) return out;
  if (!arr.is_array()) throw ParseError(where, "expected an array of [i, row, col, value] entries");
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 4)
      throw ParseError(where, "entries must be [i, row, col, value]");
    Index i = entry_index(e[0], outer, where);
    Index r = entry_index(e[1], rows, where);
    Index c = entry_index(e[2], cols, where);
    MatQ& m = out[static_cast<size_t>(i)];
    if (m(r, c) != 0) throw ParseError(where, "duplicate entry");
    m(r, c) = entry_value(e[3], where);
  }
  return out;
}

MatQ read_matrix(const json& arr, Index rows, Index cols, const std::string& where) {
  MatQ out = MatQ::Zero(rows, cols);
  if (arr.is_null()) return out;
  if (!arr.is_array()) throw ParseError(where, "expected an array of [row, col, value] entries");
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 3) throw ParseError(where, "entries must be [row, col, value]");
    Index r = entry_index(e[0], rows, where);
    Index c = entry_index(e[1], cols, where);
    if (out(r, c) != 0) throw ParseError(where, "duplicate entry");
    out(r, c) = entry_value(e[2], where);
  }
  return out;
}

json write_indexed_matrices(const std::vector<MatQ>& mats) {
  json arr = json::array();
  for (size_t i = 0; i < mats.size(); ++i)
    for (Index r = 0; r < mats[i].rows(); ++r)
      for (Index c = 0; c < mats[i].cols(); ++c)
        if (mats[i](r, c) != 0)
          arr.push_back({static_cast<long>(i), r, c, format_rational(mats[i](r, c))});
  return arr;
}

json write_matrix(const MatQ& m) {
  json arr = json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) arr.push_back({r, c, format_rational(m(r, c))});
  return arr;
}

// The multiplication/bracket tensors are serialized as (i, j, k, value)
// triples with e_i e_j = sum_k value e_k; internally the same data lives in
// the left-multiplication matrices mult[i](k, j).
std::vector<MatQ> read_tensor(const json& arr, Index dim, const std::string& where) {
  std::vector<MatQ> out(static_cast<size_t>(dim), MatQ::Zero(dim, dim));
  if (arr.is_null()) return out;
  if (!arr.is_array()) throw ParseError(where, "expected an array of [i, j, k, value] entries");
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 4) throw ParseError(where, "entries must be [i, j, k, value]");
    Index i = entry_index(e[0], dim, where);
    Index j = entry_index(e[1], dim, where);
    Index k = entry_index(e[2], dim, where);
    MatQ& m = out[static_cast<size_t>(i)];
    if (m(k, j) != 0) throw ParseError(where, "duplicate entry");
    m(k, j) = entry_value(e[3], where);
  }
  return out;
}

json write_tensor(const std::vector<MatQ>& mult) {
  json arr = json::array();
  for (size_t i = 0; i < mult.size(); ++i)
    for (Index j = 0; j < mult[i].cols(); ++j)
      for (Index k = 0; k < mult[i].rows(); ++k)
        if (mult[i](k, j) != 0)
          arr.push_back({static_cast<long>(i), j, k, format_rational(mult[i](k, j))});
  return arr;
}

PairDescription from_json(const json& root, const std::string& origin) {
  if (!root.is_object()) throw ParseError(origin, "top-level value must be an object");
  if (!root.contains("field") || root.at("field") != "Q")
    throw ParseError(origin, "field tag must be \"Q\"");
  if (!root.contains("A") || !root.contains("L"))
    throw ParseError(origin, "missing \"A\" or \"L\" block");

  PairDescription d;
  const json& a = root.at("A");
  d.algebra.dim = read_dim(a, origin + ":A");
  d.algebra.mult = read_tensor(a.value("mult", json()), d.algebra.dim, origin + ":A.mult");
  d.algebra.unit = VecQ::Zero(d.algebra.dim);
  if (a.contains("unit")) {
    const json& u = a.at("unit");
    if (!u.is_array() || static_cast<Index>(u.size()) != d.algebra.dim)
      throw ParseError(origin + ":A.unit", "unit vector length must equal dim");
    for (Index i = 0; i < d.algebra.dim; ++i)
      d.algebra.unit(i) = entry_value(u[static_cast<size_t>(i)], origin + ":A.unit");
  } else if (d.algebra.dim > 0) {
    throw ParseError(origin + ":A", "missing unit vector");
  }

  const json& l = root.at("L");
  d.lie.dim = read_dim(l, origin + ":L");
  d.lie.bracket = read_tensor(l.value("bracket", json()), d.lie.dim, origin + ":L.bracket");

  d.mu.maps = read_indexed_matrices(root.value("mu", json()), d.lie.dim, d.algebra.dim,
                                    d.algebra.dim, origin + ":mu");

  if (root.contains("module")) {
    const json& mod = root.at("module");
    if (!mod.is_object() || !mod.contains("M") || !mod.contains("P"))
      throw ParseError(origin + ":module", "module block needs \"M\" and \"P\"");
    ModuleDescription md;
    const json& m = mod.at("M");
    md.m.dim = read_dim(m, origin + ":module.M");
    md.m.left = read_indexed_matrices(m.value("left", json()), d.algebra.dim, md.m.dim, md.m.dim,
                                      origin + ":module.M.left");
    md.m.right = read_indexed_matrices(m.value("right", json()), d.algebra.dim, md.m.dim, md.m.dim,
                                       origin + ":module.M.right");
    md.m_lie.dim = md.m.dim;
    md.m_lie.action = read_indexed_matrices(m.value("lie", json()), d.lie.dim, md.m.dim, md.m.dim,
                                            origin + ":module.M.lie");
    const json& p = mod.at("P");
    md.p.dim = read_dim(p, origin + ":module.P");
    md.p.action = read_indexed_matrices(p.value("action", json()), d.lie.dim, md.p.dim, md.p.dim,
                                        origin + ":module.P.action");
    md.sigma.a_dim = d.algebra.dim;
    md.sigma.p_dim = md.p.dim;
    md.sigma.m_dim = md.m.dim;
    md.sigma.matrix = read_matrix(mod.value("sigma", json()), md.m.dim, d.algebra.dim * md.p.dim,
                                  origin + ":module.sigma");
    d.module = std::move(md);
  }
  return d;
}

}  // namespace

PairDescription parse_pair_text(std::string_view text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ":byte " + std::to_string(e.byte), e.what());
  }
  return from_json(root, origin);
}

PairDescription parse_pair_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pair_text(buf.str(), path);
}

std::string emit_pair_text(const PairDescription& d) {
  json root;
  root["field"] = "Q";
  json a;
  a["dim"] = d.algebra.dim;
  json unit = json::array();
  for (Index i = 0; i < d.algebra.dim; ++i) unit.push_back(format_rational(d.algebra.unit(i)));
  a["unit"] = unit;
  a["mult"] = write_tensor(d.algebra.mult);
  root["A"] = a;
  json l;
  l["dim"] = d.lie.dim;
  l["bracket"] = write_tensor(d.lie.bracket);
  root["L"] = l;
  root["mu"] = write_indexed_matrices(d.mu.maps);
  if (d.module) {
    json mod;
    json m;
    m["dim"] = d.module->m.dim;
    m["left"] = write_indexed_matrices(d.module->m.left);
    m["right"] = write_indexed_matrices(d.module->m.right);
    m["lie"] = write_indexed_matrices(d.module->m_lie.action);
    mod["M"] = m;
    json p;
    p["dim"] = d.module->p.dim;
    p["action"] = write_indexed_matrices(d.module->p.action);
    mod["P"] = p;
    mod["sigma"] = write_matrix(d.module->sigma.matrix);
    root["module"] = mod;
  }
  return root.dump(2) + "\n";
}

LeibnizPair validate_described_pair(const PairDescription& d) {
  return validate_pair(d.algebra, d.lie, d.mu);
}

LPModule validate_described_module(const PairDescription& d) {
  if (!d.module) throw ParseError("", "input has no module block");
  LeibnizPair pair = validate_described_pair(d);
  return validate_module(std::move(pair), d.module->m, d.module->m_lie, d.module->p,
                         d.module->sigma);
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace lpcoh
