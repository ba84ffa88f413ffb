#include "qvar/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qvar/errors.hpp"
#include "qvar/hecke.hpp"

namespace qvar {

namespace {

std::size_t sz(std::int64_t x) { return static_cast<std::size_t>(x); }

bool looks_like_rep(const json& j) { return j.is_object() && j.contains("quiver") && j.contains("dimV"); }

std::string ext_layout_description(const FramedRep& xprime, std::size_t vertex) {
  return "S_" + xprime.quiver().base().vertices()[vertex] + " -> x: " + ext_layout(xprime, vertex).describe(xprime.quiver());
}

}  // namespace

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text(const std::string& path) {
  std::ostringstream out;
  if (path == "-") {
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  out << in.rdbuf();
  return out.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + origin + ": " + e.what());
  }
}

json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(std::string("bad rational: ") + e.what());
    }
  }
  throw InputError("matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": matrix must be a list of rows");
  RatMatrix m(rows, cols);
  if (j.empty() && rows * cols == 0) return m;
  if (j.size() != rows)
    throw InputError(what + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw InputError(what + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"from", q.vertices()[a.source]}, {"to", q.vertices()[a.target]}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("quiver needs a \"vertices\" list");
  try {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Quiver::ArrowSpec> arrows;
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at("name").get<std::string>(), a.at("from").get<std::string>(), a.at("to").get<std::string>()});
    }
    return Quiver(std::move(vertices), arrows);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed quiver: ") + e.what());
  }
}

json dims_to_json(const Quiver& q, const DimVector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) out[q.vertices()[i]] = v[i];
  return out;
}

DimVector dims_from_json(const Quiver& q, const json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be an object vertex -> integer");
  DimVector v(q.vertex_count());
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number_integer()) throw InputError(what + ": entry for '" + name + "' is not an integer");
    v[q.vertex_index(name)] = value.get<std::int64_t>();
  }
  check_dims(q, v, what);
  return v;
}

ZetaParam zeta_from_json(const Quiver& q, const json& j) {
  if (!j.is_object()) throw InputError("stability parameter must be an object vertex -> number");
  std::vector<Rational> z(q.vertex_count());
  std::vector<bool> seen(q.vertex_count(), false);
  for (const auto& [name, value] : j.items()) {
    std::size_t i = q.vertex_index(name);
    seen[i] = true;
    if (value.is_number_float()) {
      z[i] = Rational(value.get<double>());
    } else {
      z[i] = rational_from_json(value);
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("stability parameter has no entry for vertex '" + q.vertices()[i] + "'");
  return ZetaParam(std::move(z));
}

json rep_to_json(const FramedRep& x) {
  const auto& q = x.quiver();
  const auto& base = q.base();
  json b = json::object(), i = json::object(), jj = json::object();
  for (std::size_t k = 0; k < q.arrows().size(); ++k) b[q.arrows()[k].name] = matrix_to_json(x.B(k));
  for (std::size_t v = 0; v < base.vertex_count(); ++v) {
    i[base.vertices()[v]] = matrix_to_json(x.I(v));
    jj[base.vertices()[v]] = matrix_to_json(x.J(v));
  }
  return {{"quiver", quiver_to_json(base)},
          {"dimV", dims_to_json(base, x.dimV())},
          {"dimW", dims_to_json(base, x.dimW())},
          {"B", b},
          {"I", i},
          {"J", jj}};
}

FramedRep rep_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!looks_like_rep(j)) throw InputError("representation needs \"quiver\" and \"dimV\"");
  Quiver q;
  if (j.at("quiver").is_string()) {
    std::filesystem::path p = j.at("quiver").get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    q = quiver_from_json(parse_json(read_text(p.string()), p.string()));
  } else {
    q = quiver_from_json(j.at("quiver"));
  }
  DimVector v = dims_from_json(q, j.at("dimV"), "dimV");
  DimVector w = j.contains("dimW") ? dims_from_json(q, j.at("dimW"), "dimW") : DimVector(q.vertex_count());
  QuiverPtr qp = make_quiver_ptr(q);
  FramedRep x(qp, v, w);
  if (j.contains("B")) {
    for (const auto& [name, m] : j.at("B").items()) {
      std::size_t k = qp->arrow_index(name);
      const auto& h = qp->arrows()[k];
      x.set_B(k, matrix_from_json(m, sz(v[h.target]), sz(v[h.source]), "B[" + name + "]"));
    }
  }
  for (const char* key : {"I", "J"}) {
    if (!j.contains(key)) continue;
    for (const auto& [name, m] : j.at(key).items()) {
      std::size_t i = q.vertex_index(name);
      if (key[0] == 'I') x.set_I(i, matrix_from_json(m, sz(v[i]), sz(w[i]), "I[" + name + "]"));
      else x.set_J(i, matrix_from_json(m, sz(w[i]), sz(v[i]), "J[" + name + "]"));
    }
  }
  return x;
}

json bundle_to_json(const ExampleBundle& b) {
  const Quiver& q = b.quiver->base();
  json points = json::array();
  for (const auto& p : b.points) points.push_back({{"label", p.label}, {"rep", rep_to_json(p.rep)}});
  return {{"name", b.name},
          {"quiver", quiver_to_json(q)},
          {"dimV", dims_to_json(q, b.v)},
          {"dimW", dims_to_json(q, b.w)},
          {"points", points}};
}

FramedRep resolve_rep(const json& doc, const std::filesystem::path& base_dir, const std::optional<std::string>& point) {
  const json* cur = &doc;
  if (cur->is_object() && cur->contains("result") && cur->contains("command")) cur = &cur->at("result");
  if (cur->is_object() && cur->contains("bundle")) cur = &cur->at("bundle");
  if (cur->is_object() && cur->contains("points")) {
    const json& pts = cur->at("points");
    if (!pts.is_array() || pts.empty()) throw InputError("bundle has no points");
    if (!point) return rep_from_json(pts.at(0).at("rep"), base_dir);
    for (const auto& p : pts)
      if (p.value("label", "") == *point) return rep_from_json(p.at("rep"), base_dir);
    try {
      std::size_t idx = std::stoul(*point);
      if (idx < pts.size()) return rep_from_json(pts.at(idx).at("rep"), base_dir);
    } catch (const std::exception&) {
    }
    throw InputError("bundle has no point '" + *point + "'");
  }
  if (cur->is_object() && cur->contains("rep") && !cur->contains("dimV")) cur = &cur->at("rep");
  return rep_from_json(*cur, base_dir);
}

std::string layout_hash(const FramedRep& xprime, std::size_t vertex) {
  return fnv1a64(ext_layout_description(xprime, vertex));
}

json classes_to_json(const FramedRep& xprime, std::size_t vertex, const std::vector<RatVector>& classes) {
  json list = json::array();
  for (const auto& c : classes) {
    json row = json::array();
    for (const auto& e : c) row.push_back(rational_to_json(e));
    list.push_back(std::move(row));
  }
  return {{"vertex", xprime.quiver().base().vertices()[vertex]},
          {"layout", ext_layout_description(xprime, vertex)},
          {"layout_hash", layout_hash(xprime, vertex)},
          {"classes", list}};
}

std::vector<RatVector> classes_from_json(const json& j, const FramedRep& xprime, std::size_t vertex) {
  const json* cur = &j;
  if (cur->is_object() && cur->contains("result") && cur->contains("command")) cur = &cur->at("result");
  if (cur->is_object() && cur->contains("cocycles")) cur = &cur->at("cocycles");
  if (!cur->is_object() || !cur->contains("classes")) throw InputError("cocycle file needs a \"classes\" list");
  const std::string expected = layout_hash(xprime, vertex);
  if (cur->contains("layout_hash") && cur->at("layout_hash").get<std::string>() != expected)
    throw InputError("cocycle layout hash " + cur->at("layout_hash").get<std::string>() + " does not match " + expected);
  std::vector<RatVector> out;
  for (const auto& row : cur->at("classes")) {
    RatVector v;
    for (const auto& e : row) v.push_back(rational_from_json(e));
    out.push_back(std::move(v));
  }
  return out;
}

json make_report(const std::string& command, const std::vector<InputRecord>& inputs, json result,
                 std::optional<std::uint64_t> seed) {
  json in = json::array();
  for (const auto& r : inputs) in.push_back({{"path", r.path}, {"hash", r.hash}});
  json report = {{"command", command},
                 {"version", kVersion},
                 {"schema", kSchemaVersion},
                 {"inputs", in},
                 {"result", std::move(result)}};
  if (seed) report["seed"] = *seed;
  return report;
}

}  // namespace qvar
