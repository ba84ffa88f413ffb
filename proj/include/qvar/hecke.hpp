#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qvar/homext.hpp"
#include "qvar/rep.hpp"

namespace qvar {

/// dim Hom(x, S_i), computed as ker(alpha) of the complex (x, S_i) and
/// cross-checked against coker(beta) of the complex (S_i, x). A mismatch
/// throws std::logic_error. Requires a flat representation on a quiver
/// without edge loops.
std::size_t epsilon_i(const FramedRep& x, std::size_t vertex);

/// Kernel of the canonical map x -> Hom(x, S_i)^dual ⊗ S_i.
struct ReductionResult {
  FramedRep reduced;
  std::size_t r = 0;
  /// Graded injection V' -> V: identity away from the vertex, an echelon
  /// basis of im(beta) at the vertex.
  GradedMap inclusion;
  /// Cocycles (layout of the complex (S_i, reduced)) spanning the
  /// complement of V'_i chosen in V_i; extending by them recovers x.
  std::vector<RatVector> classes;
  std::int64_t d_before = 0;
  std::int64_t d_after = 0;
  /// Euler characteristic of the complex (S_i, reduced).
  std::int64_t chi_reduced = 0;
};

/// Requires x flat and stable for a positive parameter. The result is flat,
/// stable, has epsilon_i = 0 and dim V' = dim V - r e_i.
ReductionResult reduce_i(const FramedRep& x, std::size_t vertex);

enum class ExtSpaceMode {
  /// Throw DomainError unless epsilon_i(x') = 0 (the third cohomology of
  /// the complex (S_i, x') vanishes).
  reduced_only,
  /// Return the middle cohomology whatever epsilon_i is.
  any,
};

/// Basis of Ext^1(S_i, x') = ker(beta')/im(alpha') as echelon-complement
/// representatives in the layout of the complex (S_i, x').
std::vector<RatVector> ext_space_i(const FramedRep& xprime, std::size_t vertex,
                                   ExtSpaceMode mode = ExtSpaceMode::reduced_only);

/// Layout of the complex (S_i, x'), the coordinate system of cocycles.
ComplexLayout ext_layout(const FramedRep& xprime, std::size_t vertex);

/// Adds one coordinate at the vertex per cocycle: arrows leaving the vertex
/// gain the cocycle's arrow columns, J gains its J-slot column, arrows
/// entering the vertex and I gain zero rows. Throws DomainError when a class
/// is not a cocycle or the quiver has edge loops. No stability checks.
FramedRep attach_cocycles(const FramedRep& xprime, std::size_t vertex, std::span<const RatVector> classes);

/// attach_cocycles with the full contract: x' flat and stable, classes
/// independent modulo im(alpha'). The output is checked flat and stable.
FramedRep extend_i(const FramedRep& xprime, std::size_t vertex, std::span<const RatVector> classes);

/// Whether some invertible g in G_V carries x to y (g B = B' g, g I = I',
/// J' g = J). A true answer is certified by an explicit g; a false answer
/// after probing is correct with high probability (random evaluation of
/// the determinant polynomial on the affine solution space).
bool are_isomorphic(const FramedRep& x, const FramedRep& y);

/// Explicit isomorphism when one is found.
std::optional<GradedMap> find_isomorphism(const FramedRep& x, const FramedRep& y);

/// Every reduce_i / extend_i call checks d(V,W) - d(V',W) = 2 r (chi' - r);
/// these counters record how many checks ran and how many failed.
struct IdentityTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

IdentityTally identity_tally();

}  // namespace qvar
