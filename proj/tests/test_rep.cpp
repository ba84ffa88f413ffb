#include "doctest.h"
#include "qvar/errors.hpp"
#include "qvar/examples.hpp"
#include "qvar/rep.hpp"

using namespace qvar;

namespace {

// mu summed arrow by arrow over the undoubled quiver
GradedEndo mu_oracle(const FramedRep& x) {
  const auto& d = x.quiver();
  const auto& base = d.base();
  const std::size_t m = base.arrows().size();
  GradedEndo mu;
  for (std::size_t i = 0; i < d.vertex_count(); ++i) mu.blocks.push_back(x.I(i) * x.J(i));
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = base.arrows()[k];
    const RatMatrix& b = x.B(k);
    const RatMatrix& bs = x.B(m + k);
    mu.blocks[a.target] = mu.blocks[a.target] + b * bs;
    mu.blocks[a.source] = mu.blocks[a.source] - bs * b;
  }
  return mu;
}

Rational trace(const RatMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

FramedRep random_rep(const QuiverPtr& q, const DimVector& v, const DimVector& w, SampleRng& rng) {
  FramedRep x(q, v, w);
  for (std::size_t h = 0; h < q->arrows().size(); ++h) {
    const auto& a = q->arrows()[h];
    x.set_B(h, rng.matrix(static_cast<std::size_t>(v[a.target]), static_cast<std::size_t>(v[a.source])));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    x.set_I(i, rng.matrix(static_cast<std::size_t>(v[i]), static_cast<std::size_t>(w[i])));
    x.set_J(i, rng.matrix(static_cast<std::size_t>(w[i]), static_cast<std::size_t>(v[i])));
  }
  return x;
}

}  // namespace

TEST_CASE("moment map examples") {
  auto a1 = make_quiver_ptr(a_quiver(1));
  FramedRep x(a1, DimVector{1}, DimVector{2});
  x.set_I(0, RatMatrix{{1, 0}});
  x.set_J(0, RatMatrix{{0}, {1}});
  CHECK(moment_map(x).blocks[0] == RatMatrix{{0}});
  CHECK(is_flat(x));

  auto a2 = make_quiver_ptr(a_quiver(2));
  FramedRep y(a2, DimVector{1, 1}, DimVector{0, 0});
  y.set_B(0, RatMatrix{{1}});
  y.set_B(1, RatMatrix{{1}});
  auto mu = moment_map(y);
  CHECK(mu.blocks[0] == RatMatrix{{-1}});
  CHECK(mu.blocks[1] == RatMatrix{{1}});
  CHECK_FALSE(is_flat(y));
  CHECK(is_flat(zero_rep(a2, DimVector{2, 3}, DimVector{1, 1})));
}

TEST_CASE("moment map against arrow-by-arrow sum") {
  SampleRng rng(31);
  for (const Quiver& base : {a_quiver(3), d_quiver(4), kronecker_quiver(), jordan_quiver()}) {
    auto q = make_quiver_ptr(base);
    const std::size_t n = base.vertex_count();
    for (int t = 0; t < 25; ++t) {
      DimVector v(n), w(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = rng.uniform(0, 3);
        w[i] = rng.uniform(0, 2);
      }
      FramedRep x = random_rep(q, v, w, rng);
      auto mu = moment_map(x);
      CHECK(mu == mu_oracle(x));
      Rational tr_mu = 0, tr_ij = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tr_mu += trace(mu.blocks[i]);
        tr_ij += trace(x.I(i) * x.J(i));
      }
      CHECK(tr_mu == tr_ij);
    }
  }
}

TEST_CASE("shapes are enforced") {
  auto q = make_quiver_ptr(a_quiver(2));
  FramedRep x(q, DimVector{1, 2}, DimVector{1, 0});
  CHECK(x.B(0).rows() == 2);
  CHECK(x.B(0).cols() == 1);
  CHECK(x.J(1).rows() == 0);
  CHECK_THROWS_AS(x.set_B(0, RatMatrix(1, 2)), DimensionError);
  CHECK_THROWS_AS(x.set_I(0, RatMatrix(1, 2)), DimensionError);
}

TEST_CASE("simple modules and direct sums") {
  auto q = make_quiver_ptr(a_quiver(2));
  FramedRep s = simple_rep(q, 0);
  CHECK(s.dimV() == DimVector{1, 0});
  CHECK(s.dimW() == DimVector{0, 0});
  CHECK(is_flat(s));
  CHECK(moment_map(s).blocks[0] == RatMatrix{{0}});

  SampleRng rng(32);
  for (int t = 0; t < 20; ++t) {
    FramedRep x = sample_flat(q, DimVector{rng.uniform(0, 2), rng.uniform(0, 2)}, DimVector{1, rng.uniform(0, 1)},
                              static_cast<std::uint64_t>(t), {2});
    FramedRep y = sample_flat(q, DimVector{1, 1}, DimVector{0, 1}, static_cast<std::uint64_t>(t) + 100, {1});
    REQUIRE(is_flat(x));
    REQUIRE(is_flat(y));
    FramedRep z = direct_sum(x, y);
    CHECK(z.dimV() == x.dimV() + y.dimV());
    CHECK(z.dimW() == x.dimW() + y.dimW());
    CHECK(is_flat(z));
    CHECK(direct_sum(x, zero_rep(q, DimVector{0, 0}, DimVector{0, 0})) == x);
  }
  auto other = make_quiver_ptr(a_quiver(3));
  CHECK_THROWS_AS(direct_sum(s, simple_rep(other, 0)), DomainError);
}

TEST_CASE("path evaluation") {
  auto q = make_quiver_ptr(a_quiver(3));
  FramedRep x(q, DimVector{1, 2, 1}, DimVector{0, 0, 0});
  x.set_B(0, RatMatrix{{2}, {3}});
  x.set_B(1, RatMatrix{{5, 7}});
  CHECK(evaluate_path(x, 1, {}) == RatMatrix::identity(2));
  const std::vector<std::size_t> one{0};
  CHECK(evaluate_path(x, 0, one) == x.B(0));
  const std::vector<std::size_t> chain{0, 1};
  CHECK(evaluate_path(x, 0, chain) == RatMatrix{{31}});
  const std::vector<std::size_t> bad{1};
  CHECK_THROWS_AS(evaluate_path(x, 0, bad), DomainError);
}

TEST_CASE("base change") {
  SampleRng rng(33);
  auto q = make_quiver_ptr(d_quiver(4));
  for (int t = 0; t < 20; ++t) {
    FramedRep x = random_rep(q, DimVector{1, 2, 1, 1}, DimVector{0, 1, 1, 0}, rng);
    GradedMap g = random_invertible(x.dimV(), rng);
    FramedRep y = conjugate(x, g);
    auto mx = moment_map(x), my = moment_map(y);
    for (std::size_t i = 0; i < 4; ++i) CHECK(my.blocks[i] * g.blocks[i] == g.blocks[i] * mx.blocks[i]);
  }
}

TEST_CASE("framing vertex rewrite on flat samples") {
  auto q = make_quiver_ptr(a_quiver(3));
  for (std::uint64_t s = 0; s < 20; ++s) {
    FramedRep x = sample_flat(q, DimVector{1, 1, 0}, DimVector{1, 0, 2}, s, {2});
    REQUIRE(is_flat(x));
    CbRep c = cb_apply(x);
    CHECK(c.rep.dimV()[c.transform.infinity] == 1);
    CHECK(c.rep.dimW().is_zero());
    CHECK(is_flat(c.rep));
    CHECK(dim_bigM(c.transform.quiver, c.rep.dimV(), c.rep.dimW()) ==
          dim_bigM(q->base(), x.dimV(), x.dimW()));
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  auto q = make_quiver_ptr(kronecker_quiver());
  CHECK(sample_flat(q, DimVector{1, 2}, DimVector{1, 1}, 5, {3}) ==
        sample_flat(q, DimVector{1, 2}, DimVector{1, 1}, 5, {3}));
  auto j = make_quiver_ptr(jordan_quiver());
  CHECK_THROWS_AS(sample_flat(j, DimVector{1}, DimVector{1}, 1, {1}), DomainError);
}
