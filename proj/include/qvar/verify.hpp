#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qvar/rep.hpp"

namespace qvar {

struct CheckLine {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, if any
};

struct SuiteResult {
  std::string name;
  std::vector<CheckLine> checks;
  bool passed() const;
};

/// Representations grouped by quiver, used by the pair suites.
struct RepCorpus {
  struct Group {
    std::string label;
    QuiverPtr quiver;
    std::vector<FramedRep> reps;
  };
  std::vector<Group> groups;
  std::size_t rep_count() const;
  /// Ordered pairs within each group.
  std::size_t pair_count() const;
};

/// A2, A3, D4 and the Kronecker quiver: simples, zero-reverse-half samples,
/// stable samples grown from dim V = 0, and direct sums.
RepCorpus build_corpus(std::uint64_t seed, std::size_t per_quiver = 16);

SuiteResult verify_sl2(std::size_t max_n = 6, std::size_t samples = 50, std::uint64_t seed = 1);
SuiteResult verify_an(std::size_t n_lo = 2, std::size_t n_hi = 6, std::size_t samples = 50, std::uint64_t seed = 2);
SuiteResult verify_d4();
SuiteResult verify_complex(const RepCorpus& corpus);
SuiteResult verify_stability(const RepCorpus& corpus);
/// The A2 induction example plus reduce/extend round trips on every stable
/// representation of the corpus.
SuiteResult verify_crystal(const RepCorpus& corpus);
SuiteResult verify_cb(std::size_t samples = 100, std::uint64_t seed = 7);

nlohmann::json suite_to_json(const SuiteResult& s);

}  // namespace qvar
