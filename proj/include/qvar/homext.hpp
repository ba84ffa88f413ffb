#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvar/rep.hpp"

namespace qvar {

/// Coordinates of the three terms of the complex attached to (x1, x2).
///
/// Every block is vectorized row-major. The two end terms share one layout:
/// Hom(V1_i, V2_i) for each vertex in order. The middle term lists, in this
/// order, Hom(V1_out(h), V2_in(h)) for every doubled arrow h, then
/// Hom(W1_i, V2_i) for every vertex (the I-slot), then Hom(V1_i, W2_i) for
/// every vertex (the J-slot).
struct ComplexLayout {
  DimVector v1, w1, v2, w2;
  std::vector<std::size_t> end_offsets;
  std::vector<std::size_t> arrow_offsets;
  std::vector<std::size_t> i_slot_offsets;
  std::vector<std::size_t> j_slot_offsets;
  std::size_t end_dim = 0;
  std::size_t middle_dim = 0;

  /// Human-readable description of every block, used for the layout hash.
  std::string describe(const DoubledQuiver& q) const;
};

ComplexLayout complex_layout(const DoubledQuiver& q, const DimVector& v1, const DimVector& w1, const DimVector& v2,
                             const DimVector& w2);

/// A middle-term vector split back into its blocks.
struct MiddleElement {
  std::vector<RatMatrix> arrows;  // C_h, shape v2_in(h) x v1_out(h)
  std::vector<RatMatrix> i_slot;  // D_i, shape v2_i x w1_i
  std::vector<RatMatrix> j_slot;  // E_i, shape w2_i x v1_i
};

MiddleElement decode_middle(const ComplexLayout& layout, const DoubledQuiver& q, const RatVector& vec);
RatVector encode_middle(const ComplexLayout& layout, const DoubledQuiver& q, const MiddleElement& m);
GradedMap decode_end(const ComplexLayout& layout, const RatVector& vec);
RatVector encode_end(const ComplexLayout& layout, const GradedMap& xi);

/// alpha(xi) = (xi_in B1_h - B2_h xi_out)_h + (xi_i I1_i)_i + (-J2_i xi_i)_i
/// beta(C,D,E)_i = sum_{in(h)=i} eps(h)(B2_h C_hbar + C_h B1_hbar) + I2_i E_i + D_i J1_i
struct Complex3 {
  RatMatrix alpha;  // middle_dim x end_dim
  RatMatrix beta;   // end_dim x middle_dim
  ComplexLayout layout;
  /// Both inputs satisfy mu = 0; otherwise beta * alpha need not vanish and
  /// the cohomological reading of the ranks below is void.
  bool inputs_flat = true;

  std::size_t end1() const { return layout.end_dim; }
  std::size_t middle() const { return layout.middle_dim; }
  std::size_t end2() const { return layout.end_dim; }
};

/// Throws DomainError when the representations live on different quivers.
Complex3 build_complex(const FramedRep& x1, const FramedRep& x2);

std::size_t hom_dim(const FramedRep& x1, const FramedRep& x2);
/// Kernel of alpha, reshaped into graded maps V1 -> V2.
std::vector<GradedMap> hom_basis(const FramedRep& x1, const FramedRep& x2);
std::int64_t ext1_dim(const FramedRep& x1, const FramedRep& x2);
/// Echelon complement of im(alpha) inside ker(beta), as middle-term vectors.
std::vector<RatVector> ext1_reps(const Complex3& c);
std::vector<RatVector> ext1_reps(const FramedRep& x1, const FramedRep& x2);
std::size_t cohom_dim(const FramedRep& x1, const FramedRep& x2);

/// All three cohomology dimensions of one complex from two rank computations.
struct Cohomology {
  std::size_t hom = 0;
  std::int64_t ext1 = 0;
  std::size_t cohom = 0;
  std::size_t end1 = 0, middle = 0, end2 = 0;
  bool is_complex = true;  // beta * alpha == 0
  bool inputs_flat = true;
};

Cohomology cohomology(const Complex3& c);
Cohomology cohomology(const FramedRep& x1, const FramedRep& x2);

struct EulerCheck {
  std::int64_t computed = 0;  // ext1 - hom - cohom
  std::int64_t formula = 0;   // chi(v1, w1, v2, w2)
  bool equal = false;
};

EulerCheck euler_check(const FramedRep& x1, const FramedRep& x2);

}  // namespace qvar
