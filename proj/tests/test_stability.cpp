#include "doctest.h"
#include "qvar/errors.hpp"
#include "qvar/examples.hpp"
#include "qvar/homext.hpp"
#include "qvar/stability.hpp"

using namespace qvar;

namespace {

// v in {0,1}^n: every graded subspace is a subset of the vertices
bool subset_invariant(const FramedRep& x, unsigned mask) {
  const auto& q = x.quiver();
  for (std::size_t h = 0; h < q.arrows().size(); ++h) {
    const auto& a = q.arrows()[h];
    if (!((mask >> a.source) & 1u) || ((mask >> a.target) & 1u)) continue;
    if (!x.B(h).is_zero()) return false;
  }
  return true;
}

DimVector mask_dims(const FramedRep& x, unsigned mask) {
  DimVector d(x.dimV().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = ((mask >> i) & 1u) ? x.dimV()[i] : 0;
  return d;
}

DimVector max_kerJ_oracle(const FramedRep& x) {
  const std::size_t n = x.dimV().size();
  unsigned best = 0;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = subset_invariant(x, m);
    for (std::size_t i = 0; i < n && ok; ++i)
      if (((m >> i) & 1u) && !x.J(i).is_zero()) ok = false;
    if (ok) best |= m;  // the sum of invariant subspaces is invariant
  }
  return mask_dims(x, best);
}

DimVector min_imI_oracle(const FramedRep& x) {
  const std::size_t n = x.dimV().size();
  unsigned best = (1u << n) - 1;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = subset_invariant(x, m);
    for (std::size_t i = 0; i < n && ok; ++i)
      if (!((m >> i) & 1u) && !x.I(i).is_zero()) ok = false;
    if (ok) best &= m;
  }
  return mask_dims(x, best);
}

FramedRep random_01(const QuiverPtr& q, SampleRng& rng) {
  const std::size_t n = q->vertex_count();
  DimVector v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = rng.uniform(0, 1);
    w[i] = rng.uniform(0, 1);
  }
  FramedRep x(q, v, w);
  auto sparse = [&](std::size_t r, std::size_t c) {
    RatMatrix m(r, c);
    if (r && c && rng.uniform(0, 2) == 0) m(0, 0) = rng.uniform(1, 3);
    return m;
  };
  for (std::size_t h = 0; h < q->arrows().size(); ++h) {
    const auto& a = q->arrows()[h];
    x.set_B(h, sparse(static_cast<std::size_t>(v[a.target]), static_cast<std::size_t>(v[a.source])));
  }
  for (std::size_t i = 0; i < n; ++i) {
    x.set_I(i, sparse(static_cast<std::size_t>(v[i]), static_cast<std::size_t>(w[i])));
    x.set_J(i, sparse(static_cast<std::size_t>(w[i]), static_cast<std::size_t>(v[i])));
  }
  return x;
}

}  // namespace

TEST_CASE("extremal subspaces against subset enumeration") {
  SampleRng rng(51);
  for (const Quiver& base : {a_quiver(3), a_quiver(4), d_quiver(4), kronecker_quiver()}) {
    auto q = make_quiver_ptr(base);
    for (int t = 0; t < 150; ++t) {
      FramedRep x = random_01(q, rng);
      auto s = max_invariant_in_kerJ(x);
      auto tt = min_invariant_over_imI(x);
      CHECK(s.dims() == max_kerJ_oracle(x));
      CHECK(tt.dims() == min_imI_oracle(x));
      CHECK(is_invariant_in_kerJ(x, s));
      CHECK(is_invariant_over_imI(x, tt));
    }
  }
}

TEST_CASE("iteration counts are bounded by dim V") {
  auto q = make_quiver_ptr(a_quiver(4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FramedRep x = sample_flat(q, DimVector{2, 1, 2, 1}, DimVector{0, 1, 0, 1}, seed);
    std::size_t it1 = 0, it2 = 0;
    max_invariant_in_kerJ(x, &it1);
    min_invariant_over_imI(x, &it2);
    CHECK(it1 <= static_cast<std::size_t>(x.dimV().total()) + 1);
    CHECK(it2 <= static_cast<std::size_t>(x.dimV().total()) + 1);
  }
}

TEST_CASE("A1: stability is injectivity of J or surjectivity of I") {
  auto q = make_quiver_ptr(a_quiver(1));
  SampleRng rng(52);
  const auto pos = ZetaParam::constant(1, 1), neg = ZetaParam::constant(1, -1);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= 4; ++k)
      for (int t = 0; t < 10; ++t) {
        FramedRep x = sample_a1(q, k, n, rng);
        REQUIRE(is_flat(x));
        CHECK((is_stable(x, pos).verdict == Verdict::stable) == (rank(x.J(0)) == k));
        CHECK((is_stable(x, neg).verdict == Verdict::stable) == (rank(x.I(0)) == k));
      }
  auto b = example_a1(3, 2);
  CHECK(is_stable(b.points[0].rep, pos).verdict == Verdict::stable);
  FramedRep z = zero_rep(q, DimVector{2}, DimVector{2});
  CHECK(max_invariant_in_kerJ(z).dims() == DimVector{2});
  CHECK(min_invariant_over_imI(z).dims() == DimVector{0});
}

TEST_CASE("broken chains") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto b = example_an(n);
    const auto pos = ZetaParam::constant(n, 1);
    for (const auto& p : b.points) CHECK_MESSAGE(is_stable(p.rep, pos).verdict == Verdict::stable, p.label);
    for (std::size_t i = 0; i < n; ++i) {
      FramedRep x = an_broken_chain(b.quiver, i, 1, 0);
      if (i + 1 < n) x.set_B(i, RatMatrix{{0}});
      else x.set_J(n - 1, RatMatrix{{0}});
      REQUIRE(is_flat(x));
      auto r = is_stable(x, pos);
      CHECK(r.verdict == Verdict::unstable);
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->dims() == DimVector::unit(n, i));
    }
  }
}

TEST_CASE("stable implies trivial stabilizer, verdict is conjugation invariant") {
  SampleRng rng(53);
  for (const Quiver& base : {a_quiver(3), d_quiver(4), kronecker_quiver()}) {
    auto q = make_quiver_ptr(base);
    const std::size_t n = base.vertex_count();
    std::size_t stable_seen = 0;
    for (std::uint64_t s = 0; s < 25; ++s) {
      DimVector w(n);
      w[s % n] = 1;
      FramedRep x = sample_flat(q, DimVector(n), w, s, {static_cast<std::size_t>(2 + s % 4)});
      auto pos = ZetaParam::constant(n, 1);
      const bool st = is_stable(x, pos).verdict == Verdict::stable;
      if (st) {
        ++stable_seen;
        CHECK(stabilizer_trivial(x));
        CHECK(hom_dim(x, x) == 0);
      }
      FramedRep y = conjugate(x, random_invertible(x.dimV(), rng));
      CHECK((is_stable(y, pos).verdict == Verdict::stable) == st);
      CHECK((is_stable(y, ZetaParam::constant(n, -1)).verdict) == is_stable(x, ZetaParam::constant(n, -1)).verdict);
    }
    CHECK(stable_seen > 0);
  }
}

TEST_CASE("errors and trivial cases") {
  auto q = make_quiver_ptr(a_quiver(2));
  FramedRep s = simple_rep(q, 0);
  CHECK_FALSE(stabilizer_trivial(s));
  CHECK_FALSE(stabilizer_trivial(zero_rep(q, DimVector{1, 1}, DimVector{0, 0})));
  CHECK_THROWS_AS(is_stable(s, ZetaParam({Rational(1), Rational(-1)})), DomainError);
  FramedRep y(q, DimVector{1, 1}, DimVector{0, 0});
  y.set_B(0, RatMatrix{{1}});
  y.set_B(1, RatMatrix{{1}});
  CHECK_THROWS_AS(is_stable(y, ZetaParam::constant(2, 1)), DomainError);
}
