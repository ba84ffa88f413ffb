#include "qvar/examples.hpp"

#include "qvar/errors.hpp"
#include "qvar/hecke.hpp"

namespace qvar {

namespace {

RatMatrix scalar(const Rational& a) {
  RatMatrix m(1, 1);
  m(0, 0) = a;
  return m;
}

std::int64_t nonzero_small(SampleRng& rng) {
  std::int64_t a = 0;
  while (a == 0) a = rng.small();
  return a;
}

std::string tag(const std::string& base, std::size_t k) { return base + "-" + std::to_string(k); }

}  // namespace

FramedRep sample_a1(const QuiverPtr& q, std::size_t k, std::size_t n, SampleRng& rng) {
  FramedRep x(q, DimVector{static_cast<std::int64_t>(k)}, DimVector{static_cast<std::int64_t>(n)});
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(std::min(k, n))));
  RatMatrix j = rng.matrix(n, r) * rng.matrix(r, k);
  // rows of I from the left null space of J
  auto left_null = kernel_basis(j.transpose());
  RatMatrix basis(left_null.size(), n);
  for (std::size_t a = 0; a < left_null.size(); ++a)
    for (std::size_t b = 0; b < n; ++b) basis(a, b) = left_null[a][b];
  x.set_I(0, rng.matrix(k, left_null.size()) * basis);
  x.set_J(0, std::move(j));
  return x;
}

FramedRep sample_an_family(const QuiverPtr& q, SampleRng& rng) {
  const std::size_t n = q->vertex_count();
  DimVector w(n);
  w[0] += 1;
  w[n - 1] += 1;
  FramedRep x(q, DimVector(std::vector<std::int64_t>(n, 1)), w);
  const Rational c = rng.small();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Rational a = nonzero_small(rng);
    x.set_B(k, scalar(a));
    x.set_B(n - 1 + k, scalar(c / a));
  }
  const Rational i1 = nonzero_small(rng), in = nonzero_small(rng);
  if (n == 1) {
    x.set_I(0, RatMatrix{{i1, in}});
    x.set_J(0, RatMatrix{{c / i1}, {-c / in}});
    return x;
  }
  x.set_I(0, scalar(i1));
  x.set_J(0, scalar(c / i1));
  x.set_I(n - 1, scalar(in));
  x.set_J(n - 1, scalar(-c / in));
  return x;
}

FramedRep an_broken_chain(const QuiverPtr& q, std::size_t vertex, const Rational& towards_n, const Rational& towards_1) {
  const std::size_t n = q->vertex_count();
  if (n < 2 || vertex >= n) throw DomainError("broken chain needs A_n with n >= 2 and a vertex in range");
  if (sgn(towards_n) == 0 && sgn(towards_1) == 0) throw DomainError("broken chain needs a nonzero map leaving the vertex");
  DimVector w(n);
  w[0] = 1;
  w[n - 1] = 1;
  FramedRep x(q, DimVector(std::vector<std::int64_t>(n, 1)), w);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k + 1 <= vertex) x.set_B(n - 1 + k, scalar(k + 1 == vertex ? towards_1 : Rational(1)));
    else x.set_B(k, scalar(k == vertex ? towards_n : Rational(1)));
  }
  x.set_J(0, scalar(vertex == 0 ? towards_1 : Rational(1)));
  x.set_J(n - 1, scalar(vertex == n - 1 ? towards_n : Rational(1)));
  return x;
}

FramedRep a2crystal_point(const QuiverPtr& q, bool special) {
  FramedRep x(q, DimVector{1, 2}, DimVector{1, 2});
  x.set_J(0, RatMatrix{{1}});
  if (special) {
    x.set_J(1, RatMatrix::identity(2));
  } else {
    x.set_B(1, RatMatrix{{1, 0}});
    x.set_J(1, RatMatrix{{0, 0}, {0, 1}});
  }
  return x;
}

ExampleBundle example_a1(std::size_t n, std::size_t k, SampleRequest samples) {
  ExampleBundle b;
  b.name = "a1";
  b.quiver = make_quiver_ptr(a_quiver(1));
  b.v = DimVector{static_cast<std::int64_t>(k)};
  b.w = DimVector{static_cast<std::int64_t>(n)};
  FramedRep x(b.quiver, b.v, b.w);
  RatMatrix j(n, k);
  for (std::size_t t = 0; t < std::min(n, k); ++t) j(t, t) = 1;
  x.set_J(0, std::move(j));
  b.points.push_back({"J-standard", std::move(x)});
  if (samples.seed) {
    SampleRng rng(*samples.seed);
    for (std::size_t s = 0; s < samples.count; ++s) b.points.push_back({tag("sample", s), sample_a1(b.quiver, k, n, rng)});
  }
  return b;
}

ExampleBundle example_an(std::size_t n, SampleRequest samples) {
  if (n < 2) throw DomainError("example an needs n >= 2");
  AdeSetup setup = ade_minimal_resolution_setup("A" + std::to_string(n));
  ExampleBundle b;
  b.name = "an";
  b.quiver = make_quiver_ptr(setup.quiver);
  b.v = setup.v;
  b.w = setup.w;
  for (std::size_t i = 0; i < n; ++i) {
    b.points.push_back({tag("broken", i + 1) + "-n", an_broken_chain(b.quiver, i, 1, 0)});
    b.points.push_back({tag("broken", i + 1) + "-1", an_broken_chain(b.quiver, i, 0, 1)});
    b.points.push_back({tag("broken", i + 1) + "-mixed", an_broken_chain(b.quiver, i, 2, -1)});
  }
  if (samples.seed) {
    SampleRng rng(*samples.seed);
    for (std::size_t s = 0; s < samples.count; ++s)
      b.points.push_back({tag("sample", s), sample_an_family(b.quiver, rng)});
  }
  return b;
}

ExampleBundle example_d4() {
  AdeSetup setup = ade_minimal_resolution_setup("D4");
  ExampleBundle b;
  b.name = "d4";
  b.quiver = make_quiver_ptr(setup.quiver);
  b.v = setup.v;
  b.w = setup.w;
  // arrows a1: 1->2, a2: 3->2, a3: 4->2 all nonzero, J_2 nonzero
  FramedRep base(b.quiver, DimVector{1, 1, 1, 1}, setup.w);
  for (std::size_t k = 0; k < 3; ++k) base.set_B(k, RatMatrix{{1}});
  base.set_J(1, RatMatrix{{1}});
  b.points.push_back({"centre-reduced", base});

  auto classes = ext_space_i(base, 1);
  for (std::size_t t = 0; t < classes.size(); ++t) {
    std::vector<RatVector> one{classes[t]};
    b.points.push_back({tag("centre-line", t), extend_i(base, 1, one)});
  }
  if (classes.size() >= 2) {
    RatVector sum = classes[0];
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += classes[1][j];
    std::vector<RatVector> one{sum};
    b.points.push_back({"centre-line-sum", extend_i(base, 1, one)});
  }
  return b;
}

ExampleBundle example_a2crystal() {
  ExampleBundle b;
  b.name = "a2crystal";
  b.quiver = make_quiver_ptr(a_quiver(2));
  b.v = DimVector{1, 2};
  b.w = DimVector{1, 2};
  b.points.push_back({"generic", a2crystal_point(b.quiver, false)});
  b.points.push_back({"B12-zero", a2crystal_point(b.quiver, true)});
  return b;
}

ExampleBundle example_ade(const std::string& label) {
  AdeSetup setup = ade_minimal_resolution_setup(label);
  ExampleBundle b;
  b.name = "ade";
  b.quiver = make_quiver_ptr(setup.quiver);
  b.v = setup.v;
  b.w = setup.w;
  b.points.push_back({"zero", FramedRep(b.quiver, b.v, b.w)});
  return b;
}

}  // namespace qvar
