#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qvar/ratmat.hpp"

namespace qvar {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver with named vertices and named arrows; parallel arrows and
/// edge loops are allowed.
class Quiver {
 public:
  struct ArrowSpec {
    std::string name;
    std::string from;
    std::string to;
  };

  Quiver() = default;
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Throws InputError for an undeclared vertex name.
  std::size_t vertex_index(std::string_view name) const;
  bool has_vertex(std::string_view name) const;
  bool has_edge_loops() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Arrow of the doubled quiver. `bar` is the index of the reversed partner,
/// `sign` is +1 on original arrows and -1 on reversed ones.
struct DoubledArrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  int sign = 1;
  std::size_t bar = 0;
  friend bool operator==(const DoubledArrow&, const DoubledArrow&) = default;
};

/// Q1 in declared order followed by the reversed arrows (named with a
/// trailing '*') in the same order.
class DoubledQuiver {
 public:
  DoubledQuiver() = default;
  explicit DoubledQuiver(Quiver base);

  const Quiver& base() const { return base_; }
  const std::vector<DoubledArrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return base_.vertex_count(); }
  std::size_t arrow_index(std::string_view name) const;

  friend bool operator==(const DoubledQuiver&, const DoubledQuiver&) = default;

 private:
  Quiver base_;
  std::vector<DoubledArrow> arrows_;
};

DoubledQuiver doubled(const Quiver& q);

/// Nonnegative integer vector indexed by the vertex order of a quiver.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  DimVector(std::initializer_list<std::int64_t> v);
  explicit DimVector(std::vector<std::int64_t> v);

  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return v_.size(); }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  const std::vector<std::int64_t>& values() const { return v_; }
  std::int64_t total() const;
  bool is_zero() const;

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<std::int64_t> v_;
};

/// Throws InputError unless v has one entry per vertex and all entries are >= 0.
void check_dims(const Quiver& q, const DimVector& v, std::string_view what);

enum class ZetaSign { positive, negative, mixed };

/// Real stability parameter with rational entries, one per vertex.
class ZetaParam {
 public:
  ZetaParam() = default;
  explicit ZetaParam(std::vector<Rational> z) : z_(std::move(z)) {}
  static ZetaParam constant(std::size_t n, const Rational& value);

  std::size_t size() const { return z_.size(); }
  const Rational& operator[](std::size_t i) const { return z_[i]; }
  ZetaSign sign() const;

 private:
  std::vector<Rational> z_;
};

/// a_ij = 2 delta_ij - #{h in doubled arrows | out(h) = i, in(h) = j}.
IntMatrix cartan_matrix(const Quiver& q);

/// dim M(V,W): doubled-arrow Hom spaces plus both framing Hom spaces.
std::int64_t dim_bigM(const Quiver& q, const DimVector& v, const DimVector& w);

/// dim M(V,W) - 2 dim G_V; negative values are reported unchanged.
std::int64_t d_of(const Quiver& q, const DimVector& v, const DimVector& w);

/// Euler characteristic (middle term minus both end terms) of the
/// three-term complex attached to a pair of framed representations.
std::int64_t chi(const Quiver& q, const DimVector& v1, const DimVector& w1, const DimVector& v2,
                 const DimVector& w2);

Rational zeta_pair(const ZetaParam& z, const DimVector& v);

/// Quiver with an extra vertex and w_i parallel arrows from it to each i.
struct CrawleyBoeveyQuiver {
  Quiver quiver;
  std::size_t infinity = 0;
  /// arrow index in `quiver` of the k-th arrow into vertex i, flattened per vertex
  std::vector<std::vector<std::size_t>> framing_arrows;
};

CrawleyBoeveyQuiver cb_transform(const Quiver& q, const DimVector& w);
/// v extended by a one-dimensional space at the added vertex.
DimVector cb_extend_dims(const DimVector& v);

/// Finite ADE quiver with v = delta restricted to the finite vertices and
/// w = 1 at the neighbour(s) of the affine vertex.
struct AdeSetup {
  std::string label;
  Quiver quiver;
  DimVector v;
  DimVector w;
};

/// Labels: A<n> (n >= 1), D<n> (n >= 4), E6, E7, E8. Vertices are named
/// "1".."n" in Bourbaki order; chains point from lower to higher labels and
/// branch arrows point into the branch vertex.
AdeSetup ade_minimal_resolution_setup(std::string_view label);

/// Named quivers used throughout the tests and the CLI.
Quiver a_quiver(std::size_t n);
Quiver d_quiver(std::size_t n);
Quiver e_quiver(std::size_t n);
Quiver jordan_quiver();
/// Two vertices joined by two parallel arrows (the affine A1 shape).
Quiver kronecker_quiver();

}  // namespace qvar
