#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qvar/rep.hpp"

namespace qvar {

/// Oriented cycle in the doubled quiver, stored as its lexicographically
/// least rotation (by arrow index).
struct CycleTrace {
  std::vector<std::size_t> word;
  Rational value;
};

/// Trace of every oriented cycle of length 1..max_length, one per rotation
/// class. Reversed cycles are distinct words and are listed separately.
std::vector<CycleTrace> cycle_traces(const FramedRep& x, std::size_t max_length);

/// Entry (row, col) of J_to * (path product) * I_from.
struct PathInvariant {
  std::size_t from = 0;
  std::vector<std::size_t> word;
  std::size_t to = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

/// All paths of length 0..max_length (the empty path once per vertex).
std::vector<PathInvariant> path_invariants(const FramedRep& x, std::size_t max_length);

/// Ordered (label, value) list: cycle traces first, then framed path entries.
struct InvariantFingerprint {
  std::vector<std::pair<std::string, Rational>> entries;
  bool all_zero() const;
  friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

/// Default degree bound 2 * sum(dim V).
std::size_t default_fingerprint_length(const FramedRep& x);

/// Coordinates of the image in the affine quotient up to degree max_length.
/// Throws DomainError for a non-flat representation.
InvariantFingerprint pi_fingerprint(const FramedRep& x, std::size_t max_length);

std::string word_label(const DoubledQuiver& q, const std::vector<std::size_t>& word);

/// A = J I on the one-vertex quiver with no arrows.
struct A1Relations {
  RatMatrix a;
  bool squares_to_zero = false;
  bool rank_ok = false;
};

A1Relations a1_relations(const FramedRep& x);

/// Invariants of the A_n configuration with dim V = (1,...,1), W = e_1 + e_n:
///   x = J_n B_{n,n-1} ... B_{2,1} I_1
///   y = -J_1 B_{1,2} ... B_{n-1,n} I_n
///   z = J_1 I_1
/// The sign on y absorbs eps(h) so that x y = z^{n+1} holds exactly on mu = 0.
struct AnXyz {
  Rational x, y, z;
  bool relation_ok = false;
};

/// Throws DomainError unless x is flat and lives on the A_n setup.
AnXyz an_xyz(const FramedRep& x);

}  // namespace qvar
