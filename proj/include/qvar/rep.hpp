#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "qvar/quiver.hpp"
#include "qvar/ratmat.hpp"

namespace qvar {

using QuiverPtr = std::shared_ptr<const DoubledQuiver>;

inline QuiverPtr make_quiver_ptr(const Quiver& q) { return std::make_shared<const DoubledQuiver>(q); }

/// One square matrix per vertex (an element of the Lie algebra of G_V, or a
/// graded linear map V1 -> V2 when the blocks are rectangular).
struct GradedMap {
  std::vector<RatMatrix> blocks;
  bool is_zero() const;
  friend bool operator==(const GradedMap&, const GradedMap&) = default;
};
using GradedEndo = GradedMap;

/// Framed representation (B, I, J) of the doubled quiver.
///
/// B_h maps the fiber at the source of h to the fiber at its target, so it
/// has shape v_target x v_source; I_i has shape v_i x w_i and J_i has shape
/// w_i x v_i. A freshly constructed representation is zero everywhere.
class FramedRep {
 public:
  FramedRep() = default;
  FramedRep(QuiverPtr quiver, DimVector dimV, DimVector dimW);

  const DoubledQuiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const DimVector& dimV() const { return dimV_; }
  const DimVector& dimW() const { return dimW_; }

  const RatMatrix& B(std::size_t arrow) const { return B_[arrow]; }
  const RatMatrix& I(std::size_t vertex) const { return I_[vertex]; }
  const RatMatrix& J(std::size_t vertex) const { return J_[vertex]; }

  /// Setters throw DimensionError when the shape differs from the forced one.
  void set_B(std::size_t arrow, RatMatrix m);
  void set_I(std::size_t vertex, RatMatrix m);
  void set_J(std::size_t vertex, RatMatrix m);

  bool same_quiver(const FramedRep& other) const;

  friend bool operator==(const FramedRep& a, const FramedRep& b);

 private:
  QuiverPtr quiver_;
  DimVector dimV_;
  DimVector dimW_;
  std::vector<RatMatrix> B_;
  std::vector<RatMatrix> I_;
  std::vector<RatMatrix> J_;
};

/// mu_i = sum_{in(h)=i} eps(h) B_h B_hbar + I_i J_i.
GradedEndo moment_map(const FramedRep& x);
bool is_flat(const FramedRep& x);

/// dimV = e_i, dimW = 0, all maps zero.
FramedRep simple_rep(const QuiverPtr& q, std::size_t vertex);
FramedRep zero_rep(const QuiverPtr& q, const DimVector& v, const DimVector& w);

/// Block-diagonal B, stacked I, concatenated J. Throws DomainError on a
/// quiver mismatch.
FramedRep direct_sum(const FramedRep& x, const FramedRep& y);

/// Product of B along the path, first arrow applied first. The empty path at
/// `start` is the identity of V_start. Throws DomainError if not composable.
RatMatrix evaluate_path(const FramedRep& x, std::size_t start, std::span<const std::size_t> path);

/// Base change by invertible g: B_h -> g_in B_h g_out^-1, I -> g I, J -> J g^-1.
FramedRep conjugate(const FramedRep& x, const GradedMap& g);

/// Seeded source of small random integers in [-3, 3].
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t small();
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  RatMatrix matrix(std::size_t rows, std::size_t cols);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random invertible block per vertex (retries until every determinant is nonzero).
GradedMap random_invertible(const DimVector& v, SampleRng& rng);

struct SampleOptions {
  /// Number of extension steps along vertices with a nonzero Ext^1 from the
  /// simple module; each step adds one dimension.
  std::size_t extend_steps = 0;
};

/// Flat representation: random B on Q1 and random I with every reversed
/// arrow and J zero (so mu vanishes term by term), followed by optional
/// extension steps that introduce nonzero J. Deterministic in the seed.
FramedRep sample_flat(const QuiverPtr& q, const DimVector& v, const DimVector& w, std::uint64_t seed,
                      SampleOptions options = {});

/// Result of the framing-vertex rewrite: an unframed representation of the
/// extended quiver together with the transform that produced it.
struct CbRep {
  CrawleyBoeveyQuiver transform;
  FramedRep rep;
};

/// Columns of I_i and rows of J_i become the matrices on the added arrows and
/// their reverses; the fiber at the added vertex is one-dimensional.
CbRep cb_apply(const FramedRep& x);

}  // namespace qvar
