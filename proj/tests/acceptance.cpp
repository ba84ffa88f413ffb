// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <cstdio>
#include <string>
#include <vector>

#include "qvar/hecke.hpp"
#include "qvar/kacmoody.hpp"
#include "qvar/verify.hpp"

using namespace qvar;

namespace {

struct Line {
  bool pass = true;
  std::string note;
};

Line from_suite(const SuiteResult& s) {
  Line l;
  std::size_t cases = 0;
  for (const auto& c : s.checks) {
    cases += c.cases;
    if (!c.passed) {
      l.pass = false;
      if (l.note.empty()) l.note = c.name + ": " + c.detail;
    }
  }
  l.pass = l.pass && s.passed();
  if (l.pass) l.note = std::to_string(s.checks.size()) + " checks, " + std::to_string(cases) + " cases";
  return l;
}

// dim of the adjoint of so(8) by the Weyl formula over norm-two vectors
std::int64_t weyl_so8_adjoint() {
  const auto a = cartan_matrix(d_quiver(4));
  const DimVector w{0, 1, 0, 0};
  Rational d = 1;
  for (std::int64_t c0 = 0; c0 <= 2; ++c0)
    for (std::int64_t c1 = 0; c1 <= 2; ++c1)
      for (std::int64_t c2 = 0; c2 <= 2; ++c2)
        for (std::int64_t c3 = 0; c3 <= 2; ++c3) {
          const DimVector r{c0, c1, c2, c3};
          if (r.is_zero()) continue;
          std::int64_t nrm = 0;
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) nrm += r[i] * a[i][j] * r[j];
          if (nrm != 2) continue;
          std::int64_t num = 0;
          for (std::size_t j = 0; j < 4; ++j) num += r[j] * (w[j] + 1);
          Rational f(num, r.total());
          f.canonicalize();
          d *= f;
        }
  return d.get_num().get_si();
}

}  // namespace

int main() {
  std::vector<Line> lines(8);

  lines[0] = from_suite(verify_sl2(6, 50, 1));
  lines[1] = from_suite(verify_an(2, 6, 50, 2));

  lines[2] = from_suite(verify_d4());
  const std::int64_t weyl = weyl_so8_adjoint();
  if (weyl != 28) {
    lines[2].pass = false;
    lines[2].note = "Weyl formula gives " + std::to_string(weyl);
  }

  const RepCorpus corpus = build_corpus(11);
  lines[3] = from_suite(verify_complex(corpus));
  if (corpus.pair_count() < 500) {
    lines[3].pass = false;
    lines[3].note = "only " + std::to_string(corpus.pair_count()) + " pairs";
  } else {
    lines[3].note += ", " + std::to_string(corpus.pair_count()) + " pairs";
  }
  lines[4] = from_suite(verify_stability(corpus));
  lines[5] = from_suite(verify_crystal(corpus));
  lines[6] = from_suite(verify_cb(100, 7));

  // every reduce/extend of the whole run, including the suites above
  const IdentityTally t = identity_tally();
  if (t.checked == 0 || t.failed != 0) {
    lines[5].pass = false;
    lines[5].note = "d-identity: " + std::to_string(t.failed) + " of " + std::to_string(t.checked) + " failed";
  } else {
    lines[5].note += ", d-identity on " + std::to_string(t.checked) + " reduce/extend calls";
  }

  const char* titles[] = {
      "sl2 family: component counts, d = 2k(n-k), stability iff J injective",
      "A_n adjoint: multiplicity n, d = 2, broken chains stable over 0, xy = z^(n+1)",
      "D4: multiplicity 4 at (1,2,1,1), d = 2, adjoint dimension 28",
      "complex and duality identities on flat pairs",
      "stable points: trivial stabilizer, vanishing first cohomology against S_i",
      "crystal induction on the A2 example and reduce/extend round trips",
      "framing-vertex rewrite: flatness at every vertex and dimension counts",
  };
  bool all = true;
  for (std::size_t i = 0; i < 7; ++i) {
    all = all && lines[i].pass;
    std::printf("criterion %zu: %s %s (%s)\n", i + 1, lines[i].pass ? "PASS" : "FAIL", titles[i], lines[i].note.c_str());
  }
  std::printf("criterion 8: EXCLUDED homology of the Lagrangian fibre and component enumeration are not computed\n");
  return all ? 0 : 1;
}
