#include "qvar/invariants.hpp"

#include <algorithm>

#include "qvar/errors.hpp"

namespace qvar {

namespace {

bool is_least_rotation(const std::vector<std::size_t>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t a = w[(r + k) % n], b = w[k];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

Rational trace(const RatMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <typename Visit>
void walk(const FramedRep& x, std::size_t at, std::size_t max_length, std::vector<std::size_t>& word,
          const RatMatrix& product, Visit& visit) {
  visit(at, word, product);
  if (word.size() == max_length) return;
  const auto& arrows = x.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k].source != at) continue;
    word.push_back(k);
    walk(x, arrows[k].target, max_length, word, x.B(k) * product, visit);
    word.pop_back();
  }
}

}  // namespace

std::string word_label(const DoubledQuiver& q, const std::vector<std::size_t>& word) {
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += '.';
    s += q.arrows()[word[k]].name;
  }
  return s;
}

std::vector<CycleTrace> cycle_traces(const FramedRep& x, std::size_t max_length) {
  std::vector<CycleTrace> out;
  const std::size_t n = x.quiver().vertex_count();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> word;
    auto visit = [&](std::size_t at, const std::vector<std::size_t>& w, const RatMatrix& product) {
      if (w.empty() || at != start || !is_least_rotation(w)) return;
      out.push_back({w, trace(product)});
    };
    walk(x, start, max_length, word, RatMatrix::identity(static_cast<std::size_t>(x.dimV()[start])), visit);
  }
  std::sort(out.begin(), out.end(), [](const CycleTrace& a, const CycleTrace& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

std::vector<PathInvariant> path_invariants(const FramedRep& x, std::size_t max_length) {
  std::vector<PathInvariant> out;
  const std::size_t n = x.quiver().vertex_count();
  for (std::size_t from = 0; from < n; ++from) {
    if (x.dimW()[from] == 0) continue;
    std::vector<std::size_t> word;
    std::vector<PathInvariant> local;
    auto visit = [&](std::size_t at, const std::vector<std::size_t>& w, const RatMatrix& product) {
      if (x.dimW()[at] == 0) return;
      RatMatrix m = x.J(at) * product;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) local.push_back({from, w, at, r, c, m(r, c)});
    };
    walk(x, from, max_length, word, x.I(from), visit);
    std::stable_sort(local.begin(), local.end(), [](const PathInvariant& a, const PathInvariant& b) {
      if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
      return a.word < b.word;
    });
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

bool InvariantFingerprint::all_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return sgn(e.second) == 0; });
}

std::size_t default_fingerprint_length(const FramedRep& x) {
  return static_cast<std::size_t>(2 * x.dimV().total());
}

InvariantFingerprint pi_fingerprint(const FramedRep& x, std::size_t max_length) {
  if (!is_flat(x)) throw DomainError("pi_fingerprint requires a flat representation (mu = 0)");
  const auto& q = x.quiver();
  const auto& names = q.base().vertices();
  InvariantFingerprint f;
  for (auto& c : cycle_traces(x, max_length)) f.entries.emplace_back("tr(" + word_label(q, c.word) + ")", c.value);
  for (auto& p : path_invariants(x, max_length)) {
    f.entries.emplace_back("J" + names[p.to] + "(" + word_label(q, p.word) + ")I" + names[p.from] + "[" +
                               std::to_string(p.row) + "," + std::to_string(p.col) + "]",
                           p.value);
  }
  return f;
}

A1Relations a1_relations(const FramedRep& x) {
  const auto& q = x.quiver();
  if (q.vertex_count() != 1 || !q.arrows().empty()) throw DomainError("a1_relations needs the one-vertex quiver with no arrows");
  A1Relations r;
  r.a = x.J(0) * x.I(0);
  r.squares_to_zero = (r.a * r.a).is_zero();
  r.rank_ok = static_cast<std::int64_t>(rank(r.a)) <= x.dimV()[0];
  return r;
}

AnXyz an_xyz(const FramedRep& rep) {
  const auto& q = rep.quiver();
  const std::size_t n = q.vertex_count();
  const auto& base = q.base().arrows();
  bool chain = n >= 2 && base.size() == n - 1;
  for (std::size_t k = 0; chain && k < base.size(); ++k) chain = base[k].source == k && base[k].target == k + 1;
  if (!chain) throw DomainError("an_xyz needs the A_n chain quiver with n >= 2");
  DimVector w(n);
  w[0] = 1;
  w[n - 1] = 1;
  if (rep.dimV() != DimVector(std::vector<std::int64_t>(n, 1)) || rep.dimW() != w)
    throw DomainError("an_xyz needs dim V = (1,...,1) and dim W = e_1 + e_n");
  if (!is_flat(rep)) throw DomainError("an_xyz requires a flat representation (mu = 0)");

  std::vector<std::size_t> forward, backward;
  for (std::size_t k = 0; k + 1 < n; ++k) forward.push_back(k);
  for (std::size_t k = n - 1; k-- > 0;) backward.push_back(n - 1 + k);

  AnXyz r;
  r.x = (rep.J(n - 1) * evaluate_path(rep, 0, forward) * rep.I(0))(0, 0);
  r.y = -(rep.J(0) * evaluate_path(rep, n - 1, backward) * rep.I(n - 1))(0, 0);
  r.z = (rep.J(0) * rep.I(0))(0, 0);
  Rational zp = 1;
  for (std::size_t k = 0; k <= n; ++k) zp *= r.z;
  r.relation_ok = (r.x * r.y == zp);
  return r;
}

}  // namespace qvar
