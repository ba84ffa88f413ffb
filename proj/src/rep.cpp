#include "qvar/rep.hpp"

#include <algorithm>
#include <numeric>

#include "qvar/errors.hpp"
#include "qvar/hecke.hpp"
#include "qvar/homext.hpp"

namespace qvar {

namespace {

void require_shape(const RatMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

bool GradedMap::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const RatMatrix& m) { return m.is_zero(); });
}

FramedRep::FramedRep(QuiverPtr quiver, DimVector dimV, DimVector dimW)
    : quiver_(std::move(quiver)), dimV_(std::move(dimV)), dimW_(std::move(dimW)) {
  const Quiver& base = quiver_->base();
  check_dims(base, dimV_, "dimV");
  check_dims(base, dimW_, "dimW");
  for (const auto& h : quiver_->arrows())
    B_.emplace_back(static_cast<std::size_t>(dimV_[h.target]), static_cast<std::size_t>(dimV_[h.source]));
  for (std::size_t i = 0; i < base.vertex_count(); ++i) {
    auto vi = static_cast<std::size_t>(dimV_[i]);
    auto wi = static_cast<std::size_t>(dimW_[i]);
    I_.emplace_back(vi, wi);
    J_.emplace_back(wi, vi);
  }
}

void FramedRep::set_B(std::size_t arrow, RatMatrix m) {
  const auto& h = quiver_->arrows().at(arrow);
  require_shape(m, static_cast<std::size_t>(dimV_[h.target]), static_cast<std::size_t>(dimV_[h.source]),
                "B[" + h.name + "]");
  B_[arrow] = std::move(m);
}

void FramedRep::set_I(std::size_t vertex, RatMatrix m) {
  require_shape(m, static_cast<std::size_t>(dimV_[vertex]), static_cast<std::size_t>(dimW_[vertex]),
                "I[" + quiver_->base().vertices().at(vertex) + "]");
  I_[vertex] = std::move(m);
}

void FramedRep::set_J(std::size_t vertex, RatMatrix m) {
  require_shape(m, static_cast<std::size_t>(dimW_[vertex]), static_cast<std::size_t>(dimV_[vertex]),
                "J[" + quiver_->base().vertices().at(vertex) + "]");
  J_[vertex] = std::move(m);
}

bool FramedRep::same_quiver(const FramedRep& other) const {
  return quiver_ == other.quiver_ || (quiver_ && other.quiver_ && *quiver_ == *other.quiver_);
}

bool operator==(const FramedRep& a, const FramedRep& b) {
  return a.same_quiver(b) && a.dimV_ == b.dimV_ && a.dimW_ == b.dimW_ && a.B_ == b.B_ && a.I_ == b.I_ &&
         a.J_ == b.J_;
}

GradedEndo moment_map(const FramedRep& x) {
  const auto& q = x.quiver();
  GradedEndo mu;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) mu.blocks.push_back(x.I(i) * x.J(i));
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    RatMatrix term = x.B(k) * x.B(h.bar);
    mu.blocks[h.target] = h.sign > 0 ? mu.blocks[h.target] + term : mu.blocks[h.target] - term;
  }
  return mu;
}

bool is_flat(const FramedRep& x) { return moment_map(x).is_zero(); }

FramedRep simple_rep(const QuiverPtr& q, std::size_t vertex) {
  const std::size_t n = q->vertex_count();
  if (vertex >= n) throw InputError("simple_rep: vertex out of range");
  return FramedRep(q, DimVector::unit(n, vertex), DimVector(n));
}

FramedRep zero_rep(const QuiverPtr& q, const DimVector& v, const DimVector& w) { return FramedRep(q, v, w); }

FramedRep direct_sum(const FramedRep& x, const FramedRep& y) {
  if (!x.same_quiver(y)) throw DomainError("direct_sum: representations live on different quivers");
  const auto& q = x.quiver();
  FramedRep s(x.quiver_ptr(), x.dimV() + y.dimV(), x.dimW() + y.dimW());
  for (std::size_t k = 0; k < q.arrows().size(); ++k) s.set_B(k, direct_sum(x.B(k), y.B(k)));
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    s.set_I(i, direct_sum(x.I(i), y.I(i)));
    s.set_J(i, direct_sum(x.J(i), y.J(i)));
  }
  return s;
}

RatMatrix evaluate_path(const FramedRep& x, std::size_t start, std::span<const std::size_t> path) {
  const auto& arrows = x.quiver().arrows();
  std::size_t at = start;
  RatMatrix product = RatMatrix::identity(static_cast<std::size_t>(x.dimV()[start]));
  for (std::size_t k : path) {
    if (k >= arrows.size()) throw InputError("evaluate_path: arrow index out of range");
    if (arrows[k].source != at) {
      throw DomainError("evaluate_path: arrow '" + arrows[k].name + "' does not start where the path stands");
    }
    product = x.B(k) * product;
    at = arrows[k].target;
  }
  return product;
}

FramedRep conjugate(const FramedRep& x, const GradedMap& g) {
  const auto& q = x.quiver();
  if (g.blocks.size() != q.vertex_count()) throw DimensionError("conjugate: wrong number of blocks");
  std::vector<RatMatrix> inv;
  for (const auto& b : g.blocks) inv.push_back(left_inverse(b));
  FramedRep y(x.quiver_ptr(), x.dimV(), x.dimW());
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& h = q.arrows()[k];
    y.set_B(k, g.blocks[h.target] * x.B(k) * inv[h.source]);
  }
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    y.set_I(i, g.blocks[i] * x.I(i));
    y.set_J(i, x.J(i) * inv[i]);
  }
  return y;
}

std::int64_t SampleRng::small() { return static_cast<std::int64_t>(engine_() % 7) - 3; }

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine_() % span);
}

RatMatrix SampleRng::matrix(std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small();
  return m;
}

GradedMap random_invertible(const DimVector& v, SampleRng& rng) {
  GradedMap g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto n = static_cast<std::size_t>(v[i]);
    RatMatrix m = rng.matrix(n, n);
    while (sgn(determinant(m)) == 0) m = rng.matrix(n, n);
    g.blocks.push_back(std::move(m));
  }
  return g;
}

FramedRep sample_flat(const QuiverPtr& q, const DimVector& v, const DimVector& w, std::uint64_t seed,
                      SampleOptions options) {
  SampleRng rng(seed);
  FramedRep x(q, v, w);
  const std::size_t n_base = q->base().arrows().size();
  for (std::size_t k = 0; k < n_base; ++k) {
    const auto& h = q->arrows()[k];
    x.set_B(k, rng.matrix(static_cast<std::size_t>(v[h.target]), static_cast<std::size_t>(v[h.source])));
  }
  for (std::size_t i = 0; i < q->vertex_count(); ++i)
    x.set_I(i, rng.matrix(static_cast<std::size_t>(v[i]), static_cast<std::size_t>(w[i])));

  if (options.extend_steps > 0 && q->base().has_edge_loops())
    throw DomainError("sample_flat: extension steps need a quiver without edge loops");

  std::vector<std::size_t> order(q->vertex_count());
  for (std::size_t step = 0; step < options.extend_steps; ++step) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng.engine());
    bool extended = false;
    for (std::size_t i : order) {
      auto reps = ext1_reps(simple_rep(q, i), x);
      if (reps.empty()) continue;
      RatVector cls(reps.front().size());
      bool nonzero = false;
      while (!nonzero) {
        std::fill(cls.begin(), cls.end(), Rational(0));
        for (const auto& r : reps) {
          Rational c = rng.small();
          if (sgn(c) != 0) nonzero = true;
          for (std::size_t t = 0; t < cls.size(); ++t) cls[t] += c * r[t];
        }
      }
      x = attach_cocycles(x, i, std::span<const RatVector>(&cls, 1));
      extended = true;
      break;
    }
    if (!extended) break;  // no vertex admits a nontrivial extension
  }
  return x;
}

CbRep cb_apply(const FramedRep& x) {
  const Quiver& base = x.quiver().base();
  CbRep out;
  out.transform = cb_transform(base, x.dimW());
  auto cbq = make_quiver_ptr(out.transform.quiver);
  const std::size_t n = base.vertex_count();
  FramedRep y(cbq, cb_extend_dims(x.dimV()), DimVector(n + 1));

  const std::size_t old_base = base.arrows().size();
  const std::size_t new_base = out.transform.quiver.arrows().size();
  // Original arrows keep their index in Q1; reversed ones shift by the number
  // of added framing arrows.
  for (std::size_t k = 0; k < old_base; ++k) {
    y.set_B(k, x.B(k));
    y.set_B(new_base + k, x.B(old_base + k));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& arrows = out.transform.framing_arrows[i];
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      y.set_B(arrows[k], x.I(i).submatrix(0, k, x.I(i).rows(), 1));
      y.set_B(new_base + arrows[k], x.J(i).submatrix(k, 0, 1, x.J(i).cols()));
    }
  }
  out.rep = std::move(y);
  return out;
}

}  // namespace qvar
