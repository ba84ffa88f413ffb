#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qvar/errors.hpp"
#include "qvar/quiver.hpp"

namespace qvar {

/// Raised when a weight lies deeper below the highest weight than the
/// root data was computed for.
class CutoffError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Symmetric Kac-Moody data. Roots are coordinate vectors over the simple
/// roots; (alpha_i, alpha_j) = a_ij and rho(h_i) = 1.
struct RootSystemData {
  IntMatrix gcm;
  bool finite_type = false;
  /// Largest root height covered; for finite type the maximal root height.
  std::int64_t height_cutoff = 0;
  std::map<DimVector, std::int64_t> positive_roots;

  std::size_t rank() const { return gcm.size(); }
  std::int64_t form(const DimVector& a, const DimVector& b) const;
  /// 0 when beta is not a positive root (or lies beyond the cutoff).
  std::int64_t multiplicity(const DimVector& beta) const;
};

/// Throws DomainError unless the matrix is a symmetric GCM.
void check_symmetric_gcm(const IntMatrix& gcm);

/// Positive definite (Sylvester's criterion on leading principal minors).
bool is_finite_type(const IntMatrix& gcm);

/// Finite type: every positive root by root strings, cutoff ignored.
/// Otherwise Peterson's recursion for all heights <= cutoff.
RootSystemData root_multiplicities(const IntMatrix& gcm, std::int64_t cutoff);

/// Highest weight lambda = sum w_i varpi_i, target lambda - sum v_i alpha_i.
struct WeightSpec {
  DimVector w;
  DimVector v;
};

/// Freudenthal recursion over one root system with its own memo table.
/// One session per thread.
class WeightSession {
 public:
  explicit WeightSession(RootSystemData roots) : roots_(std::move(roots)) {}

  const RootSystemData& roots() const { return roots_; }
  std::int64_t multiplicity(const WeightSpec& spec);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::int64_t compute(const DimVector& w, const DimVector& v);

  RootSystemData roots_;
  std::map<std::pair<DimVector, DimVector>, std::int64_t> memo_;
};

std::int64_t weight_multiplicity(const RootSystemData& roots, const WeightSpec& spec);

/// Default root cutoff for a target: sum v + 8.
std::int64_t default_cutoff(const DimVector& v);

/// w_i - sum_j a_ij v_j, asserted equal to chi((e_i, 0), (v, w)).
std::int64_t h_eigenvalue(const Quiver& q, const DimVector& v, const DimVector& w, std::size_t vertex);

/// Multiplicity of lambda - sum v_i alpha_i in L(lambda) for the quiver's
/// Kac-Moody algebra. Throws DomainError on edge loops, CutoffError when
/// the cutoff is below sum v.
std::int64_t predicted_component_count(const Quiver& q, const DimVector& v, const DimVector& w,
                                       std::optional<std::int64_t> cutoff = std::nullopt);

/// Finite type only: every v with nonzero multiplicity, with multiplicities.
std::map<DimVector, std::int64_t> all_weights(const RootSystemData& roots, const DimVector& w);

/// v' with lambda - sum v'_j alpha_j = s_i(lambda - sum v_j alpha_j).
DimVector reflect_weight(const IntMatrix& gcm, const DimVector& w, const DimVector& v, std::size_t i);

}  // namespace qvar
