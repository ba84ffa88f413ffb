#pragma once

#include <optional>
#include <vector>

#include "qvar/rep.hpp"

namespace qvar {

/// Graded subspace of V: per vertex a list of independent column vectors.
struct GradedSubspace {
  std::vector<std::vector<RatVector>> basis;

  DimVector dims() const;
  bool is_zero() const;
  /// Column matrix of the basis at vertex i (v_i x dim S_i).
  RatMatrix matrix(std::size_t vertex, std::size_t ambient) const;
};

/// Largest B-invariant graded subspace contained in ker J, by the decreasing
/// iteration S <- S ∩ ker J ∩ (∩_h B_h^{-1} S). `iterations` receives the
/// number of refinement rounds (including the final stable one).
GradedSubspace max_invariant_in_kerJ(const FramedRep& x, std::size_t* iterations = nullptr);

/// Smallest B-invariant graded subspace containing im I, by the increasing
/// iteration T <- T + sum_h B_h T.
GradedSubspace min_invariant_over_imI(const FramedRep& x, std::size_t* iterations = nullptr);

/// True when S is B-invariant and contained in ker J.
bool is_invariant_in_kerJ(const FramedRep& x, const GradedSubspace& s);
/// True when T is B-invariant and contains im I.
bool is_invariant_over_imI(const FramedRep& x, const GradedSubspace& t);

enum class Verdict { stable, unstable };

struct StabilityResult {
  Verdict verdict = Verdict::stable;
  /// The extremal subspace violating the strict inequality, when unstable.
  std::optional<GradedSubspace> witness;
};

/// Stability for a sign-definite parameter. Positive zeta: stable iff no
/// nonzero invariant subspace lies in ker J. Negative zeta: stable iff the
/// invariant closure of im I is all of V. Throws DomainError for a mixed
/// parameter or a non-flat representation.
StabilityResult is_stable(const FramedRep& x, const ZetaParam& z);

/// Framed self-Hom vanishes (equivalently, the stabilizer in G_V is trivial).
/// Throws DomainError for a non-flat representation.
bool stabilizer_trivial(const FramedRep& x);

}  // namespace qvar
