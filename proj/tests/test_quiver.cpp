#include "doctest.h"
#include "qvar/errors.hpp"
#include "qvar/quiver.hpp"
#include "qvar/rep.hpp"

using namespace qvar;

namespace {

// middle minus both ends of the complex, counted slot by slot
std::int64_t chi_oracle(const Quiver& q, const DimVector& v1, const DimVector& w1, const DimVector& v2,
                        const DimVector& w2) {
  const DoubledQuiver d(q);
  std::int64_t middle = 0, ends = 0;
  for (const auto& h : d.arrows()) middle += v1[h.source] * v2[h.target];
  for (std::size_t i = 0; i < v1.size(); ++i) {
    middle += w1[i] * v2[i] + v1[i] * w2[i];
    ends += v1[i] * v2[i];
  }
  return middle - 2 * ends;
}

DimVector rand_dims(std::size_t n, SampleRng& rng) {
  DimVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(0, 3);
  return v;
}

}  // namespace

TEST_CASE("cartan matrices") {
  CHECK(cartan_matrix(a_quiver(2)) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(jordan_quiver()) == IntMatrix{{0}});
  CHECK(cartan_matrix(kronecker_quiver()) == IntMatrix{{2, -2}, {-2, 2}});
  const auto d4 = cartan_matrix(d_quiver(4));
  CHECK(d4[1] == std::vector<std::int64_t>{-1, 2, -1, -1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(d4[i][j] == d4[j][i]);
}

TEST_CASE("doubled quiver") {
  DoubledQuiver d(a_quiver(3));
  REQUIRE(d.arrows().size() == 4);
  for (std::size_t h = 0; h < 4; ++h) {
    const auto& a = d.arrows()[h];
    const auto& b = d.arrows()[a.bar];
    CHECK(b.bar == h);
    CHECK(a.source == b.target);
    CHECK(a.sign == -b.sign);
  }
  CHECK(d.arrows()[2].name == "a1*");
}

TEST_CASE("dimension counts") {
  for (std::int64_t n = 0; n <= 5; ++n)
    for (std::int64_t k = 0; k <= 5; ++k) {
      CHECK(dim_bigM(a_quiver(1), DimVector{k}, DimVector{n}) == 2 * k * n);
      CHECK(d_of(a_quiver(1), DimVector{k}, DimVector{n}) == 2 * k * (n - k));
    }
  for (std::size_t n = 2; n <= 6; ++n) {
    DimVector v(std::vector<std::int64_t>(n, 1));
    DimVector w = DimVector::unit(n, 0) + DimVector::unit(n, n - 1);
    CHECK(dim_bigM(a_quiver(n), v, w) == 2 * static_cast<std::int64_t>(n - 1) + 4);
  }
  for (const char* label : {"A1", "A2", "A5", "D4", "D5", "D7", "E6", "E7", "E8"}) {
    const auto s = ade_minimal_resolution_setup(label);
    CHECK_MESSAGE(d_of(s.quiver, s.v, s.w) == 2, label);
  }
  CHECK_THROWS_AS(ade_minimal_resolution_setup("D3"), InputError);
  CHECK_THROWS_AS(ade_minimal_resolution_setup("F4"), InputError);
}

TEST_CASE("chi") {
  const Quiver a2 = a_quiver(2);
  CHECK(chi(a2, DimVector{1, 0}, DimVector{0, 0}, DimVector{1, 2}, DimVector{1, 2}) == 1);
  SampleRng rng(21);
  for (const Quiver& q : {a2, a_quiver(3), d_quiver(4), kronecker_quiver(), jordan_quiver()}) {
    const std::size_t n = q.vertex_count();
    const auto a = cartan_matrix(q);
    for (int t = 0; t < 40; ++t) {
      DimVector v1 = rand_dims(n, rng), w1 = rand_dims(n, rng), v2 = rand_dims(n, rng), w2 = rand_dims(n, rng);
      CHECK(chi(q, v1, w1, v2, w2) == chi_oracle(q, v1, w1, v2, w2));
      CHECK(chi(q, v1, w1, v2, w2) == chi(q, v2, w2, v1, w1));
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t av = 0;
        for (std::size_t j = 0; j < n; ++j) av += a[i][j] * v2[j];
        const DimVector e = DimVector::unit(n, i), z(n);
        CHECK(chi(q, e, z, v2, w2) + chi(q, v2, w2, e, z) == 2 * (w2[i] - av));
      }
      CHECK(d_of(q, v1, w1) == chi(q, v1, w1, v1, w1));
    }
  }
}

TEST_CASE("zeta") {
  ZetaParam z({Rational(1, 2), Rational(-1)});
  CHECK(zeta_pair(z, DimVector{2, 1}) == 0);
  CHECK(z.sign() == ZetaSign::mixed);
  CHECK(ZetaParam::constant(3, -2).sign() == ZetaSign::negative);
  CHECK_THROWS_AS(zeta_pair(z, DimVector{1}), DimensionError);
}

TEST_CASE("framing vertex rewrite") {
  const Quiver q = a_quiver(3);
  const DimVector w{2, 0, 1};
  auto cb = cb_transform(q, w);
  CHECK(cb.quiver.vertex_count() == 4);
  CHECK(cb.quiver.vertices()[cb.infinity] == "inf");
  CHECK(cb.quiver.arrows().size() == q.arrows().size() + 3);
  CHECK(cb.framing_arrows[0].size() == 2);
  CHECK(cb.framing_arrows[1].empty());
  for (std::size_t k : cb.framing_arrows[2]) {
    CHECK(cb.quiver.arrows()[k].source == cb.infinity);
    CHECK(cb.quiver.arrows()[k].target == 2);
  }
  SampleRng rng(22);
  for (int t = 0; t < 30; ++t) {
    DimVector v = rand_dims(3, rng), ww = rand_dims(3, rng);
    auto c = cb_transform(q, ww);
    CHECK(dim_bigM(c.quiver, cb_extend_dims(v), DimVector(4)) == dim_bigM(q, v, ww));
  }
  Quiver clash({"inf"}, {});
  CHECK(cb_transform(clash, DimVector{1}).quiver.vertices()[1] == "inf_");
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "2"}}), InputError);
  CHECK_THROWS_AS(check_dims(a_quiver(2), DimVector{1}, "v"), InputError);
  CHECK_THROWS_AS(check_dims(a_quiver(1), DimVector{-1}, "v"), InputError);
  CHECK(jordan_quiver().has_edge_loops());
  CHECK_FALSE(a_quiver(4).has_edge_loops());
}
