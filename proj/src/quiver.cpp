#include "qvar/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qvar/errors.hpp"

namespace qvar {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
  }
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second) throw InputError("duplicate arrow '" + a.name + "'");
    arrows_.push_back({a.name, vertex_index(a.from), vertex_index(a.to)});
  }
}

std::size_t Quiver::vertex_index(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw InputError("unknown vertex '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Quiver::has_vertex(std::string_view name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

bool Quiver::has_edge_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

DoubledQuiver::DoubledQuiver(Quiver base) : base_(std::move(base)) {
  const auto& q1 = base_.arrows();
  const std::size_t n = q1.size();
  arrows_.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) arrows_.push_back({q1[k].name, q1[k].source, q1[k].target, +1, n + k});
  for (std::size_t k = 0; k < n; ++k) arrows_.push_back({q1[k].name + "*", q1[k].target, q1[k].source, -1, k});
}

std::size_t DoubledQuiver::arrow_index(std::string_view name) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].name == name) return k;
  throw InputError("unknown arrow '" + std::string(name) + "'");
}

DoubledQuiver doubled(const Quiver& q) { return DoubledQuiver(q); }

DimVector::DimVector(std::initializer_list<std::int64_t> v) : v_(v) {}
DimVector::DimVector(std::vector<std::int64_t> v) : v_(std::move(v)) {}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector e(n);
  e[i] = 1;
  return e;
}

std::int64_t DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), std::int64_t{0}); }

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionError("dimension vectors of different length");
  DimVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionError("dimension vectors of different length");
  DimVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

void check_dims(const Quiver& q, const DimVector& v, std::string_view what) {
  if (v.size() != q.vertex_count()) {
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) + " entries, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) throw InputError(std::string(what) + " is negative at vertex '" + q.vertices()[i] + "'");
}

ZetaParam ZetaParam::constant(std::size_t n, const Rational& value) { return ZetaParam(std::vector<Rational>(n, value)); }

ZetaSign ZetaParam::sign() const {
  if (!z_.empty() && std::all_of(z_.begin(), z_.end(), [](const Rational& x) { return sgn(x) > 0; }))
    return ZetaSign::positive;
  if (!z_.empty() && std::all_of(z_.begin(), z_.end(), [](const Rational& x) { return sgn(x) < 0; }))
    return ZetaSign::negative;
  return ZetaSign::mixed;
}

IntMatrix cartan_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  // each arrow of Q contributes itself and its reverse to the doubled quiver
  for (const auto& h : q.arrows()) {
    a[h.source][h.target] -= 1;
    a[h.target][h.source] -= 1;
  }
  return a;
}

std::int64_t dim_bigM(const Quiver& q, const DimVector& v, const DimVector& w) {
  check_dims(q, v, "dimV");
  check_dims(q, w, "dimW");
  std::int64_t total = 0;
  for (const auto& h : q.arrows()) total += 2 * v[h.source] * v[h.target];
  for (std::size_t i = 0; i < v.size(); ++i) total += 2 * w[i] * v[i];
  return total;
}

std::int64_t d_of(const Quiver& q, const DimVector& v, const DimVector& w) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) g += v[i] * v[i];
  return dim_bigM(q, v, w) - 2 * g;
}

std::int64_t chi(const Quiver& q, const DimVector& v1, const DimVector& w1, const DimVector& v2,
                 const DimVector& w2) {
  check_dims(q, v1, "v1");
  check_dims(q, w1, "w1");
  check_dims(q, v2, "v2");
  check_dims(q, w2, "w2");
  std::int64_t middle = 0;
  for (const auto& h : q.arrows()) {
    middle += v1[h.source] * v2[h.target];  // h
    middle += v1[h.target] * v2[h.source];  // reversed h
  }
  std::int64_t ends = 0;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    middle += w1[i] * v2[i] + v1[i] * w2[i];
    ends += 2 * v1[i] * v2[i];
  }
  return middle - ends;
}

Rational zeta_pair(const ZetaParam& z, const DimVector& v) {
  if (z.size() != v.size()) throw DimensionError("zeta and dimension vector have different length");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += z[i] * v[i];
  return s;
}

CrawleyBoeveyQuiver cb_transform(const Quiver& q, const DimVector& w) {
  check_dims(q, w, "dimW");
  std::string inf = "inf";
  while (q.has_vertex(inf)) inf += "_";

  std::vector<std::string> vertices = q.vertices();
  vertices.push_back(inf);
  std::vector<Quiver::ArrowSpec> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.name, q.vertices()[a.source], q.vertices()[a.target]});

  CrawleyBoeveyQuiver out;
  out.framing_arrows.resize(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    for (std::int64_t k = 0; k < w[i]; ++k) {
      out.framing_arrows[i].push_back(arrows.size());
      arrows.push_back({inf + "->" + q.vertices()[i] + "#" + std::to_string(k), inf, q.vertices()[i]});
    }
  }
  out.quiver = Quiver(std::move(vertices), arrows);
  out.infinity = q.vertex_count();
  return out;
}

DimVector cb_extend_dims(const DimVector& v) {
  std::vector<std::int64_t> e = v.values();
  e.push_back(1);
  return DimVector(std::move(e));
}

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

Quiver from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Quiver::ArrowSpec> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k)
    arrows.push_back({"a" + std::to_string(k + 1), std::to_string(edges[k].first), std::to_string(edges[k].second)});
  return Quiver(numbered(n), arrows);
}

}  // namespace

Quiver a_quiver(std::size_t n) {
  if (n < 1) throw InputError("A_n needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return from_edges(n, edges);
}

Quiver d_quiver(std::size_t n) {
  if (n < 4) throw InputError("D_n needs n >= 4");
  std::vector<std::pair<int, int>> edges;
  const int branch = static_cast<int>(n) - 2;
  for (int i = 1; i < branch; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(branch + 1, branch);
  edges.emplace_back(branch + 2, branch);
  return from_edges(n, edges);
}

Quiver e_quiver(std::size_t n) {
  if (n < 6 || n > 8) throw InputError("E_n needs n in {6,7,8}");
  std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}};
  for (int i = 4; i < static_cast<int>(n); ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(2, 4);
  return from_edges(n, edges);
}

Quiver jordan_quiver() { return Quiver({"1"}, {{"b", "1", "1"}}); }

Quiver kronecker_quiver() { return Quiver({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}}); }

AdeSetup ade_minimal_resolution_setup(std::string_view label) {
  if (label.size() < 2) throw InputError("unknown ADE type '" + std::string(label) + "'");
  char family = label[0];
  std::size_t n = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw InputError("unknown ADE type '" + std::string(label) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  AdeSetup s;
  s.label = std::string(label);
  switch (family) {
    case 'A':
    case 'a': {
      s.quiver = a_quiver(n);
      s.v = DimVector(std::vector<std::int64_t>(n, 1));
      s.w = DimVector(n);
      s.w[0] += 1;
      s.w[n - 1] += 1;
      break;
    }
    case 'D':
    case 'd': {
      s.quiver = d_quiver(n);
      std::vector<std::int64_t> v(n, 2);
      v[0] = 1;
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.v = DimVector(std::move(v));
      s.w = DimVector::unit(n, 1);
      break;
    }
    case 'E':
    case 'e': {
      s.quiver = e_quiver(n);
      if (n == 6) {
        s.v = DimVector{1, 2, 2, 3, 2, 1};
        s.w = DimVector::unit(6, 1);
      } else if (n == 7) {
        s.v = DimVector{2, 2, 3, 4, 3, 2, 1};
        s.w = DimVector::unit(7, 0);
      } else {
        s.v = DimVector{2, 3, 4, 6, 5, 4, 3, 2};
        s.w = DimVector::unit(8, 7);
      }
      break;
    }
    default:
      throw InputError("unknown ADE type '" + std::string(label) + "'");
  }
  return s;
}

}  // namespace qvar
