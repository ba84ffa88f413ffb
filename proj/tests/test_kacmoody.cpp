#include "doctest.h"
#include "qvar/kacmoody.hpp"

using namespace qvar;

namespace {

std::int64_t norm(const IntMatrix& a, const DimVector& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * a[i][j] * v[j];
  return s;
}

// simply laced finite type: positive roots are the nonzero vectors of norm 2
std::vector<DimVector> roots_by_norm(const IntMatrix& a, std::int64_t max_coeff) {
  const std::size_t n = a.size();
  std::vector<DimVector> out;
  DimVector v(n);
  while (true) {
    std::size_t k = 0;
    while (k < n && v[k] == max_coeff) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    if (norm(a, v) == 2) out.push_back(v);
  }
  return out;
}

// Weyl dimension formula over the roots found above
std::int64_t weyl_dimension(const std::vector<DimVector>& roots, const DimVector& w) {
  Rational d = 1;
  for (const auto& r : roots) {
    std::int64_t num = 0;
    for (std::size_t j = 0; j < r.size(); ++j) num += r[j] * (w[j] + 1);
    Rational f(num, r.total());
    f.canonicalize();
    d *= f;
  }
  REQUIRE(d.get_den() == 1);
  return d.get_num().get_si();
}

IntMatrix affine_d4() {
  // centre last
  IntMatrix a(5, std::vector<std::int64_t>(5, 0));
  for (std::size_t i = 0; i < 5; ++i) a[i][i] = 2;
  for (std::size_t i = 0; i < 4; ++i) a[i][4] = a[4][i] = -1;
  return a;
}

}  // namespace

TEST_CASE("finite type detection") {
  CHECK(is_finite_type(cartan_matrix(a_quiver(5))));
  CHECK(is_finite_type(cartan_matrix(e_quiver(8))));
  CHECK_FALSE(is_finite_type(cartan_matrix(kronecker_quiver())));
  CHECK_FALSE(is_finite_type(affine_d4()));
  CHECK_THROWS_AS(check_symmetric_gcm(IntMatrix{{2, -1}, {-2, 2}}), DomainError);
  CHECK_THROWS_AS(check_symmetric_gcm(IntMatrix{{2, 1}, {1, 2}}), DomainError);
}

TEST_CASE("finite root systems match the norm-two vectors") {
  const std::vector<std::pair<Quiver, std::size_t>> cases{
      {a_quiver(2), 3}, {a_quiver(4), 10}, {d_quiver(4), 12}, {d_quiver(5), 20}, {e_quiver(6), 36}};
  for (const auto& [q, count] : cases) {
    const auto a = cartan_matrix(q);
    auto rs = root_multiplicities(a, 0);
    CHECK(rs.finite_type);
    CHECK(rs.positive_roots.size() == count);
    auto oracle = roots_by_norm(a, 3);
    CHECK(oracle.size() == count);
    for (const auto& r : oracle) CHECK(rs.multiplicity(r) == 1);
  }
}

TEST_CASE("Weyl dimension formula") {
  const std::vector<std::pair<Quiver, std::vector<DimVector>>> cases{
      {a_quiver(2), {DimVector{1, 0}, DimVector{1, 1}, DimVector{2, 1}, DimVector{0, 3}}},
      {a_quiver(3), {DimVector{1, 0, 1}, DimVector{0, 2, 0}, DimVector{1, 1, 1}}},
      {d_quiver(4), {DimVector{0, 1, 0, 0}, DimVector{1, 0, 0, 0}, DimVector{1, 0, 1, 1}}},
      {e_quiver(6), {DimVector{1, 0, 0, 0, 0, 0}}},
  };
  for (const auto& [q, ws] : cases) {
    const auto a = cartan_matrix(q);
    auto rs = root_multiplicities(a, 0);
    auto roots = roots_by_norm(a, 3);
    for (const auto& w : ws) {
      auto weights = all_weights(rs, w);
      std::int64_t total = 0;
      for (const auto& [v, m] : weights) {
        total += m;
        for (std::size_t i = 0; i < a.size(); ++i) {
          DimVector r = reflect_weight(a, w, v, i);
          CHECK(weight_multiplicity(rs, {w, r}) == m);
        }
      }
      CHECK(total == weyl_dimension(roots, w));
    }
  }
}

TEST_CASE("adjoint representations") {
  for (std::size_t n = 2; n <= 6; ++n) {
    DimVector v(std::vector<std::int64_t>(n, 1));
    DimVector w = DimVector::unit(n, 0) + DimVector::unit(n, n - 1);
    CHECK(predicted_component_count(a_quiver(n), v, w) == static_cast<std::int64_t>(n));
  }
  CHECK(predicted_component_count(d_quiver(4), DimVector{1, 2, 1, 1}, DimVector{0, 1, 0, 0}) == 4);
  auto rs = root_multiplicities(cartan_matrix(d_quiver(4)), 0);
  std::int64_t total = 0;
  for (const auto& [v, m] : all_weights(rs, DimVector{0, 1, 0, 0})) total += m;
  CHECK(total == 28);
}

TEST_CASE("sl2") {
  for (std::int64_t n = 0; n <= 6; ++n) {
    for (std::int64_t k = 0; k <= 8; ++k) {
      CHECK(predicted_component_count(a_quiver(1), DimVector{k}, DimVector{n}) == (k <= n ? 1 : 0));
      CHECK(h_eigenvalue(a_quiver(1), DimVector{k}, DimVector{n}, 0) == n - 2 * k);
    }
  }
}

TEST_CASE("affine A1") {
  const auto a = cartan_matrix(kronecker_quiver());
  auto rs = root_multiplicities(a, 12);
  CHECK_FALSE(rs.finite_type);
  for (std::int64_t k = 1; k <= 6; ++k) {
    CHECK(rs.multiplicity(DimVector{k, k}) == 1);
    CHECK(rs.multiplicity(DimVector{k, k - 1}) == 1);
    CHECK(rs.multiplicity(DimVector{k - 1, k}) == 1);
    CHECK(rs.multiplicity(DimVector{k + 1, k - 1}) == 0);
  }
  // basic representation: the depth-k weights on the delta string are partitions of k
  const std::int64_t partitions[] = {1, 1, 2, 3, 5, 7};
  for (std::int64_t k = 0; k <= 5; ++k)
    CHECK(predicted_component_count(kronecker_quiver(), DimVector{k, k}, DimVector{1, 0}) == partitions[k]);
}

TEST_CASE("affine D4") {
  auto rs = root_multiplicities(affine_d4(), 12);
  CHECK(rs.multiplicity(DimVector{1, 1, 1, 1, 2}) == 4);
  CHECK(rs.multiplicity(DimVector{2, 2, 2, 2, 4}) == 4);
  CHECK(rs.multiplicity(DimVector{1, 1, 1, 0, 2}) == 1);
  CHECK(rs.multiplicity(DimVector{0, 0, 0, 0, 2}) == 0);
}

TEST_CASE("cutoffs") {
  auto rs = root_multiplicities(cartan_matrix(kronecker_quiver()), 3);
  CHECK(rs.height_cutoff == 3);
  CHECK_THROWS_AS(weight_multiplicity(rs, {DimVector{1, 0}, DimVector{2, 2}}), CutoffError);
  CHECK_THROWS_AS(predicted_component_count(kronecker_quiver(), DimVector{3, 3}, DimVector{1, 0}, 4), CutoffError);
  CHECK(default_cutoff(DimVector{3, 3}) == 14);
  CHECK_THROWS_AS(predicted_component_count(jordan_quiver(), DimVector{1}, DimVector{1}), DomainError);

  WeightSession session(root_multiplicities(cartan_matrix(a_quiver(3)), 0));
  CHECK(session.multiplicity({DimVector{1, 0, 1}, DimVector{1, 1, 1}}) == 3);
  CHECK(session.memo_size() > 0);
  CHECK(session.multiplicity({DimVector{1, 0, 0}, DimVector{0, 1, 0}}) == 0);
}
