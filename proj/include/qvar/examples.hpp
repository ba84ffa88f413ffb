#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvar/rep.hpp"

namespace qvar {

struct NamedPoint {
  std::string label;
  FramedRep rep;
};

/// Quiver, dimension vectors and a list of representations on them.
struct ExampleBundle {
  std::string name;
  QuiverPtr quiver;
  DimVector v;
  DimVector w;
  std::vector<NamedPoint> points;
};

/// Sampling request attached to a generator; no samples without a seed.
struct SampleRequest {
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
};

/// A1 with dim V = k, dim W = n. The first point has J injective (when
/// k <= n) and is stable; seeded samples follow.
ExampleBundle example_a1(std::size_t n, std::size_t k, SampleRequest samples = {});

/// A_n with v = (1,...,1), w = e_1 + e_n: one broken-chain point per vertex,
/// then seeded flat samples from the generic family.
ExampleBundle example_an(std::size_t n, SampleRequest samples = {});

/// D4 with v = (1,2,1,1), w = e_2: the (1,1,1,1) point and two points of the
/// line obtained by extending it at the centre.
ExampleBundle example_d4();

/// A2 with v = (1,2), w = (1,2): a generic point (B on 2 -> 1 nonzero) and
/// the point where that map vanishes.
ExampleBundle example_a2crystal();

/// The minimal-resolution setup of an ADE label with the zero point.
ExampleBundle example_ade(const std::string& label);

/// Flat A1 point with random J of random rank and I J = 0.
FramedRep sample_a1(const QuiverPtr& q, std::size_t k, std::size_t n, SampleRng& rng);

/// Flat point of the A_n setup: a_k b_k = c for every edge, I_1 J_1 = c,
/// I_n J_n = -c, with random nonzero a_k, I_1, I_n and random c.
FramedRep sample_an_family(const QuiverPtr& q, SampleRng& rng);

/// Chain broken at `vertex` (0-based): maps point away from it towards the
/// two framings; (towards_n, towards_1) are the two maps leaving the vertex
/// (J at an end vertex stands in for the missing arrow).
FramedRep an_broken_chain(const QuiverPtr& q, std::size_t vertex, const Rational& towards_n, const Rational& towards_1);

FramedRep a2crystal_point(const QuiverPtr& q, bool special);

}  // namespace qvar
