#include "qvar/stability.hpp"

#include "qvar/errors.hpp"
#include "qvar/homext.hpp"

namespace qvar {

namespace {

std::size_t sz(std::int64_t x) { return static_cast<std::size_t>(x); }

// Echelon basis of the column span of m.
std::vector<RatVector> canonical_span(const RatMatrix& m) {
  RatMatrix rows = row_space_basis(m.transpose());
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(rows.row(r));
  return out;
}

std::vector<RatVector> as_columns(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

}  // namespace

DimVector GradedSubspace::dims() const {
  DimVector d(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) d[i] = static_cast<std::int64_t>(basis[i].size());
  return d;
}

bool GradedSubspace::is_zero() const { return dims().is_zero(); }

RatMatrix GradedSubspace::matrix(std::size_t vertex, std::size_t ambient) const {
  return RatMatrix::from_columns(ambient, basis[vertex]);
}

GradedSubspace max_invariant_in_kerJ(const FramedRep& x, std::size_t* iterations) {
  const auto& q = x.quiver();
  const std::size_t n = q.vertex_count();
  // S_i = ker(A_i); constraints only ever grow.
  std::vector<RatMatrix> constraints;
  for (std::size_t i = 0; i < n; ++i) constraints.push_back(row_space_basis(x.J(i)));

  std::size_t rounds = 0;
  bool changed = true;
  while (changed) {
    ++rounds;
    changed = false;
    std::vector<RatMatrix> next = constraints;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const auto& h = q.arrows()[k];
      next[h.source] = vstack(next[h.source], constraints[h.target] * x.B(k));
    }
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = row_space_basis(next[i]);
      if (next[i].rows() != constraints[i].rows()) changed = true;
    }
    constraints = std::move(next);
  }
  if (iterations) *iterations = rounds;

  GradedSubspace s;
  for (std::size_t i = 0; i < n; ++i) s.basis.push_back(kernel_basis(constraints[i]));
  return s;
}

GradedSubspace min_invariant_over_imI(const FramedRep& x, std::size_t* iterations) {
  const auto& q = x.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<RatMatrix> span;
  for (std::size_t i = 0; i < n; ++i) span.push_back(RatMatrix::from_columns(sz(x.dimV()[i]), canonical_span(x.I(i))));

  std::size_t rounds = 0;
  bool changed = true;
  while (changed) {
    ++rounds;
    changed = false;
    std::vector<RatMatrix> next = span;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const auto& h = q.arrows()[k];
      next[h.target] = hstack(next[h.target], x.B(k) * span[h.source]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = RatMatrix::from_columns(sz(x.dimV()[i]), canonical_span(next[i]));
      if (next[i].cols() != span[i].cols()) changed = true;
    }
    span = std::move(next);
  }
  if (iterations) *iterations = rounds;

  GradedSubspace t;
  for (std::size_t i = 0; i < n; ++i) t.basis.push_back(as_columns(span[i]));
  return t;
}

bool is_invariant_in_kerJ(const FramedRep& x, const GradedSubspace& s) {
  const auto& q = x.quiver();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (!(x.J(i) * s.matrix(i, sz(x.dimV()[i]))).is_zero()) return false;
  }
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    RatMatrix target = s.matrix(h.target, sz(x.dimV()[h.target]));
    RatMatrix image = x.B(k) * s.matrix(h.source, sz(x.dimV()[h.source]));
    if (rank(hstack(target, image)) != target.cols()) return false;
  }
  return true;
}

bool is_invariant_over_imI(const FramedRep& x, const GradedSubspace& t) {
  const auto& q = x.quiver();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    RatMatrix ti = t.matrix(i, sz(x.dimV()[i]));
    if (rank(hstack(ti, x.I(i))) != ti.cols()) return false;
  }
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    RatMatrix target = t.matrix(h.target, sz(x.dimV()[h.target]));
    RatMatrix image = x.B(k) * t.matrix(h.source, sz(x.dimV()[h.source]));
    if (rank(hstack(target, image)) != target.cols()) return false;
  }
  return true;
}

StabilityResult is_stable(const FramedRep& x, const ZetaParam& z) {
  if (z.size() != x.quiver().vertex_count()) throw InputError("stability parameter has the wrong number of entries");
  ZetaSign sign = z.sign();
  if (sign == ZetaSign::mixed) {
    throw DomainError("stability is only decided for sign-definite parameters (all > 0 or all < 0)");
  }
  if (!is_flat(x)) throw DomainError("stability check requires a flat representation (mu = 0)");

  StabilityResult result;
  if (sign == ZetaSign::positive) {
    GradedSubspace s = max_invariant_in_kerJ(x);
    if (!s.is_zero()) {
      result.verdict = Verdict::unstable;
      result.witness = std::move(s);
    }
  } else {
    GradedSubspace t = min_invariant_over_imI(x);
    if (t.dims() != x.dimV()) {
      result.verdict = Verdict::unstable;
      result.witness = std::move(t);
    }
  }
  return result;
}

bool stabilizer_trivial(const FramedRep& x) {
  if (!is_flat(x)) throw DomainError("stabilizer check requires a flat representation (mu = 0)");
  return hom_dim(x, x) == 0;
}

}  // namespace qvar
