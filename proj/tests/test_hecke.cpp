#include <algorithm>

#include "doctest.h"
#include "qvar/errors.hpp"
#include "qvar/examples.hpp"
#include "qvar/hecke.hpp"
#include "qvar/homext.hpp"
#include "qvar/stability.hpp"

using namespace qvar;

namespace {

// maps V -> S_i killing every incoming arrow and I_i: v_i - rank [B_h | I_i]
std::size_t epsilon_oracle(const FramedRep& x, std::size_t i) {
  const auto& q = x.quiver();
  const auto vi = static_cast<std::size_t>(x.dimV()[i]);
  RatMatrix incoming = x.I(i);
  for (std::size_t h = 0; h < q.arrows().size(); ++h)
    if (q.arrows()[h].target == i) incoming = hstack(incoming, x.B(h));
  return vi - rank(incoming);
}

bool pos_stable(const FramedRep& x) {
  return is_stable(x, ZetaParam::constant(x.quiver().vertex_count(), 1)).verdict == Verdict::stable;
}

std::vector<FramedRep> stable_samples(const QuiverPtr& q, std::uint64_t seed, std::size_t count) {
  std::vector<FramedRep> out;
  const std::size_t n = q->vertex_count();
  SampleRng rng(seed);
  while (out.size() < count) {
    DimVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = rng.uniform(0, 1);
    if (w.is_zero()) continue;
    FramedRep x = sample_flat(q, DimVector(n), w, rng.engine()(), {static_cast<std::size_t>(rng.uniform(1, 5))});
    if (pos_stable(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

TEST_CASE("epsilon on the induction example") {
  auto b = example_a2crystal();
  const FramedRep& generic = b.points[0].rep;
  CHECK(epsilon_i(generic, 0) == 0);
  CHECK(epsilon_i(generic, 1) == epsilon_oracle(generic, 1));
  CHECK(epsilon_i(b.points[1].rep, 0) == 1);
  auto q = make_quiver_ptr(a_quiver(2));
  CHECK(epsilon_i(simple_rep(q, 0), 0) == 1);
  CHECK(epsilon_i(simple_rep(q, 0), 1) == 0);
}

TEST_CASE("epsilon against the cokernel count") {
  for (const Quiver& base : {a_quiver(3), d_quiver(4), kronecker_quiver()}) {
    auto q = make_quiver_ptr(base);
    for (const auto& x : stable_samples(q, 71, 10))
      for (std::size_t i = 0; i < base.vertex_count(); ++i) CHECK(epsilon_i(x, i) == epsilon_oracle(x, i));
  }
}

TEST_CASE("induction example reduction") {
  auto b = example_a2crystal();
  CHECK(ext_space_i(b.points[0].rep, 0).size() == 1);
  CHECK_THROWS_AS(ext_space_i(b.points[1].rep, 0), DomainError);
  CHECK(ext_space_i(b.points[1].rep, 0, ExtSpaceMode::any).size() == 2);

  auto r = reduce_i(b.points[0].rep, 1);
  CHECK(r.reduced.dimV() == DimVector{1, 0});
  CHECK(r.r == 2);
  CHECK(epsilon_i(r.reduced, 1) == 0);
  CHECK(r.d_before - r.d_after == 2 * static_cast<std::int64_t>(r.r) * (r.chi_reduced - static_cast<std::int64_t>(r.r)));
  FramedRep back = extend_i(r.reduced, 1, r.classes);
  CHECK(are_isomorphic(back, b.points[0].rep));
}

TEST_CASE("reduce and extend round trips") {
  for (const Quiver& base : {a_quiver(2), a_quiver(3), d_quiver(4), kronecker_quiver()}) {
    auto q = make_quiver_ptr(base);
    for (const auto& x : stable_samples(q, 72, 8)) {
      for (std::size_t i = 0; i < base.vertex_count(); ++i) {
        const std::size_t eps = epsilon_oracle(x, i);
        auto r = reduce_i(x, i);
        CHECK(r.r == eps);
        DimVector expect = x.dimV();
        expect[i] -= static_cast<std::int64_t>(eps);
        CHECK(r.reduced.dimV() == expect);
        CHECK(is_flat(r.reduced));
        CHECK(pos_stable(r.reduced));
        CHECK(epsilon_i(r.reduced, i) == 0);
        CHECK(r.classes.size() == r.r);
        // inclusion intertwines the maps
        for (std::size_t h = 0; h < q->arrows().size(); ++h) {
          const auto& a = q->arrows()[h];
          CHECK(x.B(h) * r.inclusion.blocks[a.source] == r.inclusion.blocks[a.target] * r.reduced.B(h));
        }
        FramedRep back = extend_i(r.reduced, i, r.classes);
        CHECK(back.dimV() == x.dimV());
        CHECK(are_isomorphic(back, x));
        const auto e = ext_space_i(r.reduced, i);
        CHECK(static_cast<std::int64_t>(e.size()) == r.chi_reduced);
      }
    }
  }
  auto t = identity_tally();
  CHECK(t.checked > 0);
  CHECK(t.failed == 0);
}

TEST_CASE("no classes means no change") {
  auto q = make_quiver_ptr(a_quiver(3));
  for (const auto& x : stable_samples(q, 73, 5)) {
    std::vector<RatVector> none;
    CHECK(extend_i(x, 1, none) == x);
    for (std::size_t i = 0; i < 3; ++i)
      if (epsilon_i(x, i) == 0) CHECK(reduce_i(x, i).reduced == x);
  }
}

TEST_CASE("isomorphism tests") {
  auto q = make_quiver_ptr(d_quiver(4));
  SampleRng rng(74);
  for (const auto& x : stable_samples(q, 75, 6)) {
    CHECK(are_isomorphic(x, x));
    GradedMap g = random_invertible(x.dimV(), rng);
    FramedRep y = conjugate(x, g);
    auto f = find_isomorphism(x, y);
    REQUIRE(f.has_value());
    for (std::size_t i = 0; i < 4; ++i) CHECK(determinant(f->blocks[i]) != 0);
    CHECK(conjugate(x, *f) == y);
  }
  auto a2 = make_quiver_ptr(a_quiver(2));
  CHECK_FALSE(are_isomorphic(simple_rep(a2, 0), simple_rep(a2, 1)));
  auto b = example_a2crystal();
  CHECK_FALSE(are_isomorphic(b.points[0].rep, b.points[1].rep));
}

TEST_CASE("precondition errors") {
  auto q = make_quiver_ptr(a_quiver(2));
  auto zero = zero_rep(q, DimVector{1, 0}, DimVector{0, 0});
  CHECK_THROWS_AS(reduce_i(zero, 0), DomainError);
  auto j = make_quiver_ptr(jordan_quiver());
  CHECK_THROWS_AS(epsilon_i(simple_rep(j, 0), 0), DomainError);

  auto b = example_a2crystal();
  const FramedRep& x = b.points[0].rep;
  auto cls = ext_space_i(x, 0);
  REQUIRE(cls.size() == 1);
  std::vector<RatVector> twice{cls[0], cls[0]};
  CHECK_THROWS_AS(extend_i(x, 0, twice), DomainError);
  const auto c = build_complex(simple_rep(b.quiver, 0), x);
  bool found = false;
  for (std::size_t k = 0; k < c.middle() && !found; ++k) {
    RatVector e(c.middle(), 0);
    e[k] = 1;
    auto img = qvar::apply(c.beta, e);
    if (std::all_of(img.begin(), img.end(), [](const Rational& v) { return v == 0; })) continue;
    found = true;
    std::vector<RatVector> one{e};
    CHECK_THROWS_AS(attach_cocycles(x, 0, one), DomainError);
  }
  CHECK(found);
}
