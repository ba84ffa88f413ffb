#include "qvar/homext.hpp"

#include <sstream>

#include "qvar/errors.hpp"

namespace qvar {

namespace {

std::size_t sz(std::int64_t x) { return static_cast<std::size_t>(x); }

// out[row_off + (a, b)] += sign * (L * xi * R)[a, b] as a function of the
// block xi stored at column offset col_off. L is p x m, xi is m x n, R is n x q.
void add_sandwich(RatMatrix& out, std::size_t row_off, std::size_t col_off, const RatMatrix& left,
                  const RatMatrix& right, int sign) {
  const std::size_t p = left.rows(), m = left.cols();
  const std::size_t n = right.rows(), q = right.cols();
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t s = 0; s < m; ++s) {
      const Rational& l = left(a, s);
      if (sgn(l) == 0) continue;
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t b = 0; b < q; ++b) {
          const Rational& r = right(t, b);
          if (sgn(r) == 0) continue;
          Rational& cell = out(row_off + a * q + b, col_off + s * n + t);
          if (sign > 0)
            cell += l * r;
          else
            cell -= l * r;
        }
      }
    }
  }
}

RatMatrix block_of(const RatVector& vec, std::size_t offset, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = vec[offset + r * cols + c];
  return m;
}

void store_block(RatVector& vec, std::size_t offset, const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) vec[offset + r * m.cols() + c] = m(r, c);
}

}  // namespace

ComplexLayout complex_layout(const DoubledQuiver& q, const DimVector& v1, const DimVector& w1, const DimVector& v2,
                             const DimVector& w2) {
  ComplexLayout L{v1, w1, v2, w2, {}, {}, {}, {}, 0, 0};
  const std::size_t n = q.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    L.end_offsets.push_back(L.end_dim);
    L.end_dim += sz(v2[i] * v1[i]);
  }
  for (const auto& h : q.arrows()) {
    L.arrow_offsets.push_back(L.middle_dim);
    L.middle_dim += sz(v2[h.target] * v1[h.source]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    L.i_slot_offsets.push_back(L.middle_dim);
    L.middle_dim += sz(v2[i] * w1[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    L.j_slot_offsets.push_back(L.middle_dim);
    L.middle_dim += sz(w2[i] * v1[i]);
  }
  return L;
}

std::string ComplexLayout::describe(const DoubledQuiver& q) const {
  std::ostringstream os;
  const auto& names = q.base().vertices();
  os << "end:";
  for (std::size_t i = 0; i < names.size(); ++i) os << names[i] << '=' << v2[i] << 'x' << v1[i] << ';';
  os << "arrows:";
  for (const auto& h : q.arrows()) os << h.name << '=' << v2[h.target] << 'x' << v1[h.source] << ';';
  os << "I:";
  for (std::size_t i = 0; i < names.size(); ++i) os << names[i] << '=' << v2[i] << 'x' << w1[i] << ';';
  os << "J:";
  for (std::size_t i = 0; i < names.size(); ++i) os << names[i] << '=' << w2[i] << 'x' << v1[i] << ';';
  return os.str();
}

MiddleElement decode_middle(const ComplexLayout& L, const DoubledQuiver& q, const RatVector& vec) {
  if (vec.size() != L.middle_dim) throw DimensionError("decode_middle: vector length does not match the layout");
  MiddleElement m;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    m.arrows.push_back(block_of(vec, L.arrow_offsets[k], sz(L.v2[h.target]), sz(L.v1[h.source])));
  }
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    m.i_slot.push_back(block_of(vec, L.i_slot_offsets[i], sz(L.v2[i]), sz(L.w1[i])));
    m.j_slot.push_back(block_of(vec, L.j_slot_offsets[i], sz(L.w2[i]), sz(L.v1[i])));
  }
  return m;
}

RatVector encode_middle(const ComplexLayout& L, const DoubledQuiver& q, const MiddleElement& m) {
  RatVector vec(L.middle_dim);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) store_block(vec, L.arrow_offsets[k], m.arrows[k]);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    store_block(vec, L.i_slot_offsets[i], m.i_slot[i]);
    store_block(vec, L.j_slot_offsets[i], m.j_slot[i]);
  }
  return vec;
}

GradedMap decode_end(const ComplexLayout& L, const RatVector& vec) {
  if (vec.size() != L.end_dim) throw DimensionError("decode_end: vector length does not match the layout");
  GradedMap g;
  for (std::size_t i = 0; i < L.end_offsets.size(); ++i)
    g.blocks.push_back(block_of(vec, L.end_offsets[i], sz(L.v2[i]), sz(L.v1[i])));
  return g;
}

RatVector encode_end(const ComplexLayout& L, const GradedMap& xi) {
  RatVector vec(L.end_dim);
  for (std::size_t i = 0; i < L.end_offsets.size(); ++i) store_block(vec, L.end_offsets[i], xi.blocks[i]);
  return vec;
}

Complex3 build_complex(const FramedRep& x1, const FramedRep& x2) {
  if (!x1.same_quiver(x2)) throw DomainError("build_complex: representations live on different quivers");
  const DoubledQuiver& q = x1.quiver();
  const DimVector &v1 = x1.dimV(), &w1 = x1.dimW(), &v2 = x2.dimV(), &w2 = x2.dimW();
  Complex3 c{RatMatrix(), RatMatrix(), complex_layout(q, v1, w1, v2, w2), is_flat(x1) && is_flat(x2)};
  const ComplexLayout& L = c.layout;
  c.alpha = RatMatrix(L.middle_dim, L.end_dim);
  c.beta = RatMatrix(L.end_dim, L.middle_dim);

  auto id1 = [&](std::size_t i) { return RatMatrix::identity(sz(v1[i])); };
  auto id2 = [&](std::size_t i) { return RatMatrix::identity(sz(v2[i])); };

  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    const std::size_t s = h.source, t = h.target;
    // alpha: C_h = xi_t B1_h - B2_h xi_s
    add_sandwich(c.alpha, L.arrow_offsets[k], L.end_offsets[t], id2(t), x1.B(k), +1);
    add_sandwich(c.alpha, L.arrow_offsets[k], L.end_offsets[s], x2.B(k), id1(s), -1);
    // beta at vertex t = in(h): eps(h) (B2_h C_hbar + C_h B1_hbar)
    add_sandwich(c.beta, L.end_offsets[t], L.arrow_offsets[h.bar], x2.B(k), id1(t), h.sign);
    add_sandwich(c.beta, L.end_offsets[t], L.arrow_offsets[k], id2(t), x1.B(h.bar), h.sign);
  }
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    add_sandwich(c.alpha, L.i_slot_offsets[i], L.end_offsets[i], id2(i), x1.I(i), +1);
    add_sandwich(c.alpha, L.j_slot_offsets[i], L.end_offsets[i], x2.J(i), id1(i), -1);
    add_sandwich(c.beta, L.end_offsets[i], L.j_slot_offsets[i], x2.I(i), id1(i), +1);
    add_sandwich(c.beta, L.end_offsets[i], L.i_slot_offsets[i], id2(i), x1.J(i), +1);
  }
  return c;
}

Cohomology cohomology(const Complex3& c) {
  Cohomology h;
  h.end1 = c.end1();
  h.middle = c.middle();
  h.end2 = c.end2();
  h.inputs_flat = c.inputs_flat;
  const std::size_t ra = rank(c.alpha);
  const std::size_t rb = rank(c.beta);
  h.hom = h.end1 - ra;
  h.ext1 = static_cast<std::int64_t>(h.middle - rb) - static_cast<std::int64_t>(ra);
  h.cohom = h.end2 - rb;
  h.is_complex = (c.beta * c.alpha).is_zero();
  return h;
}

Cohomology cohomology(const FramedRep& x1, const FramedRep& x2) { return cohomology(build_complex(x1, x2)); }

std::size_t hom_dim(const FramedRep& x1, const FramedRep& x2) {
  Complex3 c = build_complex(x1, x2);
  return c.end1() - rank(c.alpha);
}

std::vector<GradedMap> hom_basis(const FramedRep& x1, const FramedRep& x2) {
  Complex3 c = build_complex(x1, x2);
  std::vector<GradedMap> out;
  for (const auto& v : kernel_basis(c.alpha)) out.push_back(decode_end(c.layout, v));
  return out;
}

std::int64_t ext1_dim(const FramedRep& x1, const FramedRep& x2) { return cohomology(x1, x2).ext1; }

std::vector<RatVector> ext1_reps(const Complex3& c) {
  auto ker = kernel_basis(c.beta);
  auto img = image_basis(c.alpha);
  return complement_in(img, ker);
}

std::vector<RatVector> ext1_reps(const FramedRep& x1, const FramedRep& x2) {
  return ext1_reps(build_complex(x1, x2));
}

std::size_t cohom_dim(const FramedRep& x1, const FramedRep& x2) {
  Complex3 c = build_complex(x1, x2);
  return c.end2() - rank(c.beta);
}

EulerCheck euler_check(const FramedRep& x1, const FramedRep& x2) {
  Cohomology h = cohomology(x1, x2);
  EulerCheck e;
  e.computed = h.ext1 - static_cast<std::int64_t>(h.hom) - static_cast<std::int64_t>(h.cohom);
  e.formula = chi(x1.quiver().base(), x1.dimV(), x1.dimW(), x2.dimV(), x2.dimW());
  e.equal = e.computed == e.formula;
  return e;
}

}  // namespace qvar
