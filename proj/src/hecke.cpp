#include "qvar/hecke.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "qvar/errors.hpp"
#include "qvar/stability.hpp"

namespace qvar {

namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_failed{0};

std::size_t sz(std::int64_t x) { return static_cast<std::size_t>(x); }

void require_loop_free(const FramedRep& x, const char* what) {
  if (x.quiver().base().has_edge_loops()) throw DomainError(std::string(what) + " needs a quiver without edge loops");
}

void require_flat(const FramedRep& x, const char* what) {
  if (!is_flat(x)) throw DomainError(std::string(what) + " requires a flat representation (mu = 0)");
}

void require_stable(const FramedRep& x, const char* what) {
  auto result = is_stable(x, ZetaParam::constant(x.quiver().vertex_count(), 1));
  if (result.verdict != Verdict::stable)
    throw DomainError(std::string(what) + " requires a representation stable for a positive parameter");
}

void record_identity(const FramedRep& big, const FramedRep& small, std::size_t vertex, std::size_t r) {
  const Quiver& q = big.quiver().base();
  const std::int64_t before = d_of(q, big.dimV(), big.dimW());
  const std::int64_t after = d_of(q, small.dimV(), small.dimW());
  const std::int64_t chi_small =
      chi(q, DimVector::unit(q.vertex_count(), vertex), DimVector(q.vertex_count()), small.dimV(), small.dimW());
  const auto rr = static_cast<std::int64_t>(r);
  g_checked.fetch_add(1, std::memory_order_relaxed);
  if (before - after != 2 * rr * (chi_small - rr)) {
    g_failed.fetch_add(1, std::memory_order_relaxed);
    throw std::logic_error("dimension identity d(V,W) - d(V',W) = 2r(chi' - r) violated");
  }
}

std::vector<RatVector> echelon_columns(const RatMatrix& m) {
  RatMatrix rows = row_space_basis(m.transpose());
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(rows.row(r));
  return out;
}

}  // namespace

std::size_t epsilon_i(const FramedRep& x, std::size_t vertex) {
  require_loop_free(x, "epsilon_i");
  require_flat(x, "epsilon_i");
  FramedRep s = simple_rep(x.quiver_ptr(), vertex);
  const std::size_t via_hom = hom_dim(x, s);
  const std::size_t via_cokernel = cohom_dim(s, x);
  if (via_hom != via_cokernel) throw std::logic_error("epsilon_i: Hom(x,S_i) and coker(beta) disagree");
  return via_hom;
}

ComplexLayout ext_layout(const FramedRep& xprime, std::size_t vertex) {
  const std::size_t n = xprime.quiver().vertex_count();
  return complex_layout(xprime.quiver(), DimVector::unit(n, vertex), DimVector(n), xprime.dimV(), xprime.dimW());
}

ReductionResult reduce_i(const FramedRep& x, std::size_t vertex) {
  require_loop_free(x, "reduce_i");
  require_flat(x, "reduce_i");
  require_stable(x, "reduce_i");
  const auto& q = x.quiver();
  const std::size_t n = q.vertex_count();
  FramedRep s = simple_rep(x.quiver_ptr(), vertex);
  Complex3 c = build_complex(s, x);
  // a nonzero xi in ker(alpha) would embed S_i into x inside ker J
  if (rank(c.alpha) != c.end1()) throw std::logic_error("reduce_i: Hom(S_i, x) is nonzero for a stable x");

  // End term of (S_i, x) is Hom(C, V_i) = V_i.
  std::vector<RatVector> sub = echelon_columns(c.beta);
  const std::size_t vi = sz(x.dimV()[vertex]);
  const std::size_t r = vi - sub.size();
  if (r != epsilon_i(x, vertex)) throw std::logic_error("reduce_i: coker(beta) disagrees with epsilon_i");

  RatMatrix incl = RatMatrix::from_columns(vi, sub);
  RatMatrix proj = sub.empty() ? RatMatrix(0, vi) : left_inverse(incl);

  DimVector vprime = x.dimV();
  vprime[vertex] -= static_cast<std::int64_t>(r);
  FramedRep red(x.quiver_ptr(), vprime, x.dimW());
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    RatMatrix b = x.B(k);
    if (h.target == vertex) {
      if (!(incl * (proj * b) == b)) throw std::logic_error("reduce_i: image of an incoming arrow leaves im(beta)");
      b = proj * b;
    }
    if (h.source == vertex) b = b * incl;
    red.set_B(k, std::move(b));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i == vertex) {
      if (!(incl * (proj * x.I(i)) == x.I(i))) throw std::logic_error("reduce_i: im(I) leaves im(beta)");
      red.set_I(i, proj * x.I(i));
      red.set_J(i, x.J(i) * incl);
    } else {
      red.set_I(i, x.I(i));
      red.set_J(i, x.J(i));
    }
  }

  ReductionResult out;
  out.r = r;
  for (std::size_t i = 0; i < n; ++i)
    out.inclusion.blocks.push_back(i == vertex ? incl : RatMatrix::identity(sz(x.dimV()[i])));

  // Classes recovering x: the standard vectors completing im(beta) in V_i.
  std::vector<RatVector> standard;
  for (std::size_t k = 0; k < vi; ++k) {
    RatVector e(vi);
    e[k] = 1;
    standard.push_back(std::move(e));
  }
  ComplexLayout layout = ext_layout(red, vertex);
  for (const auto& col : complement_in(sub, standard)) {
    MiddleElement m = decode_middle(layout, q, RatVector(layout.middle_dim));
    RatMatrix qcol = RatMatrix::column_vector(col);
    for (std::size_t k = 0; k < q.arrows().size(); ++k)
      if (q.arrows()[k].source == vertex) m.arrows[k] = x.B(k) * qcol;
    m.j_slot[vertex] = x.J(vertex) * qcol;
    out.classes.push_back(encode_middle(layout, q, m));
  }

  const Quiver& base = q.base();
  out.d_before = d_of(base, x.dimV(), x.dimW());
  out.d_after = d_of(base, red.dimV(), red.dimW());
  out.chi_reduced = chi(base, DimVector::unit(n, vertex), DimVector(n), red.dimV(), red.dimW());
  record_identity(x, red, vertex, r);
  out.reduced = std::move(red);
  return out;
}

std::vector<RatVector> ext_space_i(const FramedRep& xprime, std::size_t vertex, ExtSpaceMode mode) {
  require_loop_free(xprime, "ext_space_i");
  require_flat(xprime, "ext_space_i");
  Complex3 c = build_complex(simple_rep(xprime.quiver_ptr(), vertex), xprime);
  if (mode == ExtSpaceMode::reduced_only && c.end2() != rank(c.beta))
    throw DomainError("ext_space_i: Hom(x', S_i) is nonzero; reduce at this vertex first");
  return ext1_reps(c);
}

FramedRep attach_cocycles(const FramedRep& xprime, std::size_t vertex, std::span<const RatVector> classes) {
  require_loop_free(xprime, "attach_cocycles");
  const auto& q = xprime.quiver();
  const std::size_t n = q.vertex_count();
  if (classes.empty()) return xprime;

  Complex3 c = build_complex(simple_rep(xprime.quiver_ptr(), vertex), xprime);
  std::vector<MiddleElement> parts;
  for (const auto& cls : classes) {
    if (cls.size() != c.middle()) throw DomainError("attach_cocycles: class does not match the complex layout");
    RatVector image = qvar::apply(c.beta, cls);
    if (!std::all_of(image.begin(), image.end(), [](const Rational& v) { return sgn(v) == 0; }))
      throw DomainError("attach_cocycles: class is not a cocycle (beta != 0)");
    parts.push_back(decode_middle(c.layout, q, cls));
  }
  const std::size_t r = classes.size();

  DimVector v = xprime.dimV();
  v[vertex] += static_cast<std::int64_t>(r);
  FramedRep x(xprime.quiver_ptr(), v, xprime.dimW());
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    RatMatrix b = xprime.B(k);
    if (h.source == vertex) {
      for (const auto& p : parts) b = hstack(b, p.arrows[k]);
    } else if (h.target == vertex) {
      b = vstack(b, RatMatrix(r, b.cols()));
    }
    x.set_B(k, std::move(b));
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix ii = xprime.I(i), jj = xprime.J(i);
    if (i == vertex) {
      ii = vstack(ii, RatMatrix(r, ii.cols()));
      for (const auto& p : parts) jj = hstack(jj, p.j_slot[i]);
    }
    x.set_I(i, std::move(ii));
    x.set_J(i, std::move(jj));
  }
  return x;
}

FramedRep extend_i(const FramedRep& xprime, std::size_t vertex, std::span<const RatVector> classes) {
  require_loop_free(xprime, "extend_i");
  require_flat(xprime, "extend_i");
  require_stable(xprime, "extend_i");
  if (classes.empty()) return xprime;

  Complex3 c = build_complex(simple_rep(xprime.quiver_ptr(), vertex), xprime);
  auto img = image_basis(c.alpha);
  if (complement_in(img, classes).size() != classes.size())
    throw DomainError("extend_i: classes are dependent modulo im(alpha')");

  FramedRep x = attach_cocycles(xprime, vertex, classes);
  if (!is_flat(x)) throw std::logic_error("extend_i: extension of cocycles is not flat");
  if (is_stable(x, ZetaParam::constant(x.quiver().vertex_count(), 1)).verdict != Verdict::stable)
    throw std::logic_error("extend_i: extension of a stable point by independent classes is unstable");
  record_identity(x, xprime, vertex, classes.size());
  return x;
}

std::optional<GradedMap> find_isomorphism(const FramedRep& x, const FramedRep& y) {
  if (!x.same_quiver(y) || x.dimV() != y.dimV() || x.dimW() != y.dimW()) return std::nullopt;
  const auto& q = x.quiver();
  Complex3 c = build_complex(x, y);
  // alpha(g) = (g B_x - B_y g, g I_x, -J_y g); ask for (0, I_y, -J_x).
  MiddleElement rhs = decode_middle(c.layout, q, RatVector(c.middle()));
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    rhs.i_slot[i] = y.I(i);
    rhs.j_slot[i] = scale(-1, x.J(i));
  }
  auto particular = solve(c.alpha, encode_middle(c.layout, q, rhs));
  if (!particular) return std::nullopt;
  auto kernel = kernel_basis(c.alpha);

  auto invertible = [&](const RatVector& vec) -> std::optional<GradedMap> {
    GradedMap g = decode_end(c.layout, vec);
    for (const auto& b : g.blocks)
      if (sgn(determinant(b)) == 0) return std::nullopt;
    return g;
  };
  if (auto g = invertible(*particular)) return g;
  if (kernel.empty()) return std::nullopt;

  SampleRng rng(0x5eed);
  constexpr int kProbes = 64;
  for (int probe = 0; probe < kProbes; ++probe) {
    RatVector vec = *particular;
    for (const auto& k : kernel) {
      Rational t = rng.uniform(-50, 50);
      for (std::size_t j = 0; j < vec.size(); ++j) vec[j] += t * k[j];
    }
    if (auto g = invertible(vec)) return g;
  }
  return std::nullopt;
}

bool are_isomorphic(const FramedRep& x, const FramedRep& y) { return find_isomorphism(x, y).has_value(); }

IdentityTally identity_tally() { return {g_checked.load(), g_failed.load()}; }

}  // namespace qvar
