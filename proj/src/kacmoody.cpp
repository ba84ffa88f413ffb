#include "qvar/kacmoody.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

#include "qvar/ratmat.hpp"

namespace qvar {

namespace {

std::int64_t height(const DimVector& v) { return v.total(); }

bool nonnegative(const DimVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) return false;
  return true;
}

std::int64_t pairing(const IntMatrix& a, const DimVector& beta, std::size_t i) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += a[i][j] * beta[j];
  return s;
}

std::map<DimVector, std::int64_t> finite_roots(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::map<DimVector, std::int64_t> roots;
  std::deque<DimVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    roots[DimVector::unit(n, i)] = 1;
    queue.push_back(DimVector::unit(n, i));
  }
  // heights processed in increasing order, so every beta - k alpha_i is known
  while (!queue.empty()) {
    DimVector beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t p = 0;
      DimVector down = beta;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !roots.count(down)) break;
        ++p;
      }
      const std::int64_t q = p - pairing(a, beta, i);
      if (q <= 0) continue;
      DimVector up = beta + DimVector::unit(n, i);
      if (roots.emplace(up, 1).second) queue.push_back(up);
    }
  }
  return roots;
}

void for_each_below(const DimVector& top, const std::function<void(const DimVector&)>& f) {
  DimVector cur(top.size());
  while (true) {
    f(cur);
    std::size_t i = 0;
    while (i < top.size() && cur[i] == top[i]) cur[i++] = 0;
    if (i == top.size()) return;
    ++cur[i];
  }
}

std::map<DimVector, std::int64_t> peterson_roots(const IntMatrix& a, std::int64_t cutoff) {
  const std::size_t n = a.size();
  auto form = [&](const DimVector& x, const DimVector& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * a[i][j] * y[j];
    return s;
  };

  // every nonzero beta of height <= cutoff, ordered by height
  std::vector<DimVector> all;
  std::function<void(DimVector&, std::size_t, std::int64_t)> gen = [&](DimVector& cur, std::size_t i, std::int64_t left) {
    if (i == n) {
      if (!cur.is_zero()) all.push_back(cur);
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      cur[i] = k;
      gen(cur, i + 1, left - k);
    }
    cur[i] = 0;
  };
  DimVector scratch(n);
  gen(scratch, 0, cutoff);
  std::stable_sort(all.begin(), all.end(), [](const DimVector& x, const DimVector& y) { return height(x) < height(y); });

  std::map<DimVector, Rational> c;
  std::map<DimVector, std::int64_t> mult;
  for (const auto& beta : all) {
    // sum over k >= 2 of mult(beta / k) / k
    Rational multiples = 0;
    for (std::int64_t k = 2; k <= height(beta); ++k) {
      DimVector part(n);
      bool divisible = true;
      for (std::size_t i = 0; i < n && divisible; ++i) {
        divisible = beta[i] % k == 0;
        part[i] = beta[i] / k;
      }
      if (!divisible) continue;
      auto it = mult.find(part);
      if (it == mult.end()) continue;
      Rational share(it->second, k);
      share.canonicalize();
      multiples += share;
    }

    Rational cb;
    if (height(beta) == 1) {
      cb = 1;
    } else {
      Rational rhs = 0;
      for_each_below(beta, [&](const DimVector& b1) {
        if (b1.is_zero() || b1 == beta) return;
        DimVector b2 = beta - b1;
        auto i1 = c.find(b1), i2 = c.find(b2);
        if (i1 == c.end() || i2 == c.end() || sgn(i1->second) == 0 || sgn(i2->second) == 0) return;
        rhs += Rational(form(b1, b2)) * i1->second * i2->second;
      });
      const std::int64_t coeff = form(beta, beta) - 2 * height(beta);
      if (coeff == 0) {
        // (beta, beta) = 2 ht(beta) > 2: not a root
        if (sgn(rhs) != 0) throw std::logic_error("Peterson recursion: zero coefficient with nonzero sum");
        cb = multiples;
      } else {
        cb = rhs / coeff;
      }
    }
    c[beta] = cb;

    Rational m = cb - multiples;
    if (m.get_den() != 1 || sgn(m) < 0) throw std::logic_error("Peterson recursion produced a non-integral multiplicity");
    if (sgn(m) > 0) mult[beta] = m.get_num().get_si();
  }
  return mult;
}

}  // namespace

std::int64_t RootSystemData::form(const DimVector& a, const DimVector& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < gcm.size(); ++i)
    for (std::size_t j = 0; j < gcm.size(); ++j) s += a[i] * gcm[i][j] * b[j];
  return s;
}

std::int64_t RootSystemData::multiplicity(const DimVector& beta) const {
  auto it = positive_roots.find(beta);
  return it == positive_roots.end() ? 0 : it->second;
}

void check_symmetric_gcm(const IntMatrix& gcm) {
  const std::size_t n = gcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gcm[i].size() != n) throw DomainError("generalized Cartan matrix must be square");
    if (gcm[i][i] != 2) throw DomainError("generalized Cartan matrix needs 2 on the diagonal (no edge loops)");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && gcm[i][j] > 0) throw DomainError("generalized Cartan matrix has a positive off-diagonal entry");
      if (gcm[i][j] != gcm[j][i]) throw DomainError("generalized Cartan matrix is not symmetric");
    }
  }
}

bool is_finite_type(const IntMatrix& gcm) {
  const std::size_t n = gcm.size();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = gcm[i][j];
    if (sgn(determinant(m)) <= 0) return false;
  }
  return true;
}

RootSystemData root_multiplicities(const IntMatrix& gcm, std::int64_t cutoff) {
  check_symmetric_gcm(gcm);
  RootSystemData rs;
  rs.gcm = gcm;
  rs.finite_type = is_finite_type(gcm);
  if (rs.finite_type) {
    rs.positive_roots = finite_roots(gcm);
    for (const auto& [beta, m] : rs.positive_roots) rs.height_cutoff = std::max(rs.height_cutoff, height(beta));
  } else {
    if (cutoff < 1) throw DomainError("root height cutoff must be at least 1");
    rs.positive_roots = peterson_roots(gcm, cutoff);
    rs.height_cutoff = cutoff;
  }
  return rs;
}

std::int64_t WeightSession::multiplicity(const WeightSpec& spec) {
  const std::size_t n = roots_.rank();
  if (spec.w.size() != n || spec.v.size() != n) throw InputError("weight spec does not match the root system rank");
  if (!nonnegative(spec.w)) throw InputError("highest weight must be dominant (w >= 0)");
  if (!nonnegative(spec.v)) return 0;
  if (!roots_.finite_type && height(spec.v) > roots_.height_cutoff)
    throw CutoffError("root cutoff " + std::to_string(roots_.height_cutoff) + " is below the depth " +
                      std::to_string(height(spec.v)) + " of the requested weight");
  return compute(spec.w, spec.v);
}

std::int64_t WeightSession::compute(const DimVector& w, const DimVector& v) {
  if (v.is_zero()) return 1;
  auto key = std::make_pair(w, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::size_t n = roots_.rank();
  std::int64_t coeff = -roots_.form(v, v);
  for (std::size_t i = 0; i < n; ++i) coeff += 2 * v[i] * (w[i] + 1);

  std::int64_t rhs = 0;
  for (const auto& [alpha, mult] : roots_.positive_roots) {
    if (height(alpha) > height(v)) continue;
    std::int64_t lam_alpha = 0;
    for (std::size_t j = 0; j < n; ++j) lam_alpha += alpha[j] * w[j];
    const std::int64_t va = roots_.form(v, alpha);
    const std::int64_t aa = roots_.form(alpha, alpha);
    DimVector rest = v;
    for (std::int64_t k = 1;; ++k) {
      rest = rest - alpha;
      if (!nonnegative(rest)) break;
      const std::int64_t m = compute(w, rest);
      if (m) rhs += mult * (lam_alpha - va + k * aa) * m;
    }
  }
  rhs *= 2;

  std::int64_t result = 0;
  if (coeff <= 0) {
    if (rhs != 0) throw std::logic_error("Freudenthal recursion: nonpositive coefficient with nonzero sum");
  } else {
    if (rhs % coeff != 0 || rhs < 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    result = rhs / coeff;
  }
  memo_.emplace(std::move(key), result);
  return result;
}

std::int64_t weight_multiplicity(const RootSystemData& roots, const WeightSpec& spec) {
  WeightSession session(roots);
  return session.multiplicity(spec);
}

std::int64_t default_cutoff(const DimVector& v) { return height(v) + 8; }

std::int64_t h_eigenvalue(const Quiver& q, const DimVector& v, const DimVector& w, std::size_t vertex) {
  check_dims(q, v, "dim V");
  check_dims(q, w, "dim W");
  IntMatrix a = cartan_matrix(q);
  const std::int64_t h = w[vertex] - pairing(a, v, vertex);
  const std::size_t n = q.vertex_count();
  if (h != chi(q, DimVector::unit(n, vertex), DimVector(n), v, w))
    throw std::logic_error("h_eigenvalue disagrees with the Euler characteristic against S_i");
  return h;
}

std::int64_t predicted_component_count(const Quiver& q, const DimVector& v, const DimVector& w,
                                       std::optional<std::int64_t> cutoff) {
  if (q.has_edge_loops()) throw DomainError("Kac-Moody data needs a quiver without edge loops");
  check_dims(q, v, "dim V");
  check_dims(q, w, "dim W");
  RootSystemData rs = root_multiplicities(cartan_matrix(q), cutoff.value_or(default_cutoff(v)));
  return weight_multiplicity(rs, {w, v});
}

std::map<DimVector, std::int64_t> all_weights(const RootSystemData& roots, const DimVector& w) {
  if (!roots.finite_type) throw DomainError("all_weights needs a finite-type root system");
  WeightSession session(roots);
  const std::size_t n = roots.rank();
  std::map<DimVector, std::int64_t> out;
  std::deque<DimVector> queue{DimVector(n)};
  out[DimVector(n)] = 1;
  while (!queue.empty()) {
    DimVector v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      DimVector next = v + DimVector::unit(n, i);
      if (out.count(next)) continue;
      const std::int64_t m = session.multiplicity({w, next});
      if (m == 0) continue;
      out[next] = m;
      queue.push_back(next);
    }
  }
  return out;
}

DimVector reflect_weight(const IntMatrix& gcm, const DimVector& w, const DimVector& v, std::size_t i) {
  DimVector out = v;
  out[i] += w[i] - pairing(gcm, v, i);
  return out;
}

}  // namespace qvar
