#include "qvar/verify.hpp"

#include <functional>
#include <sstream>

#include "qvar/examples.hpp"
#include "qvar/hecke.hpp"
#include "qvar/homext.hpp"
#include "qvar/invariants.hpp"
#include "qvar/kacmoody.hpp"
#include "qvar/stability.hpp"

namespace qvar {

namespace {

class Check {
 public:
  explicit Check(std::string name) { line_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++line_.cases;
    if (ok) return;
    ++line_.failures;
    if (line_.detail.empty()) line_.detail = what();
  }

  // Runs one case; an exception counts as a failure.
  void run(const std::function<bool()>& body, const std::function<std::string()>& what) {
    try {
      expect(body(), what);
    } catch (const std::exception& e) {
      expect(false, [&] { return what() + " threw: " + e.what(); });
    }
  }

  CheckLine done() {
    line_.passed = line_.failures == 0 && line_.cases > 0;
    if (line_.cases == 0) line_.detail = "no cases ran";
    return line_;
  }

 private:
  CheckLine line_;
};

std::string str(const DimVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool zeta_pos_stable(const FramedRep& x) {
  return is_stable(x, ZetaParam::constant(x.quiver().vertex_count(), 1)).verdict == Verdict::stable;
}

DimVector random_dims(std::size_t n, std::int64_t hi, SampleRng& rng) {
  DimVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(0, hi);
  return v;
}

DimVector random_nonzero_dims(std::size_t n, std::int64_t hi, SampleRng& rng) {
  DimVector v = random_dims(n, hi, rng);
  while (v.is_zero()) v = random_dims(n, hi, rng);
  return v;
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::size_t RepCorpus::rep_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.reps.size();
  return n;
}

std::size_t RepCorpus::pair_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.reps.size() * g.reps.size();
  return n;
}

RepCorpus build_corpus(std::uint64_t seed, std::size_t per_quiver) {
  RepCorpus corpus;
  const std::vector<std::pair<std::string, Quiver>> shapes{
      {"A2", a_quiver(2)}, {"A3", a_quiver(3)}, {"D4", d_quiver(4)}, {"Kronecker", kronecker_quiver()}};
  SampleRng rng(seed);
  for (const auto& [label, quiver] : shapes) {
    RepCorpus::Group g;
    g.label = label;
    g.quiver = make_quiver_ptr(quiver);
    const std::size_t n = quiver.vertex_count();
    for (std::size_t i = 0; i < n && g.reps.size() < per_quiver; ++i) g.reps.push_back(simple_rep(g.quiver, i));
    std::size_t round = 0;
    while (g.reps.size() < per_quiver) {
      const std::uint64_t s = rng.engine()();
      switch (round++ % 3) {
        case 0:
          g.reps.push_back(sample_flat(g.quiver, random_dims(n, 2, rng), random_dims(n, 1, rng), s));
          break;
        case 1: {
          SampleOptions opt;
          opt.extend_steps = static_cast<std::size_t>(rng.uniform(2, 6));
          g.reps.push_back(sample_flat(g.quiver, DimVector(n), random_nonzero_dims(n, 1, rng), s, opt));
          break;
        }
        default: {
          const auto& a = g.reps[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1))];
          SampleOptions opt;
          opt.extend_steps = 1;
          FramedRep b = sample_flat(g.quiver, DimVector(n), random_nonzero_dims(n, 1, rng), s, opt);
          g.reps.push_back(direct_sum(a, b));
          break;
        }
      }
    }
    corpus.groups.push_back(std::move(g));
  }
  return corpus;
}

SuiteResult verify_sl2(std::size_t max_n, std::size_t samples, std::uint64_t seed) {
  SuiteResult out{"sl2", {}};
  Check count("component count is 1 for k <= n and 0 for k > n");
  Check dim("d(V,W) = 2k(n-k)");
  Check stab("stable for zeta > 0 iff J injective");
  Check rel("A = JI squares to zero and rank A <= dim V");
  const Quiver a1 = a_quiver(1);
  QuiverPtr q = make_quiver_ptr(a1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t k = 0; k <= max_n + 2; ++k) {
      const auto kk = static_cast<std::int64_t>(k), nn = static_cast<std::int64_t>(n);
      DimVector v{kk}, w{nn};
      auto label = [&] { return "k=" + std::to_string(k) + " n=" + std::to_string(n); };
      count.run([&] { return predicted_component_count(a1, v, w) == (k <= n ? 1 : 0); }, label);
      dim.run([&] { return d_of(a1, v, w) == 2 * kk * (nn - kk); }, label);
      if (k > n) continue;
      SampleRng rng(seed * 1000003 + n * 131 + k);
      for (std::size_t s = 0; s < samples; ++s) {
        FramedRep x = sample_a1(q, k, n, rng);
        auto who = [&] { return label() + " sample " + std::to_string(s); };
        stab.run([&] { return zeta_pos_stable(x) == (rank(x.J(0)) == k); }, who);
        rel.run([&] {
          auto r = a1_relations(x);
          return r.squares_to_zero && r.rank_ok;
        }, who);
      }
    }
  }
  out.checks = {count.done(), dim.done(), stab.done(), rel.done()};
  return out;
}

SuiteResult verify_an(std::size_t n_lo, std::size_t n_hi, std::size_t samples, std::uint64_t seed) {
  SuiteResult out{"an", {}};
  Check mult("weight multiplicity at v=(1,...,1), w=e1+en equals n");
  Check dim("d(V,W) = 2");
  Check broken("broken-chain points are flat, stable, with zero fingerprint");
  Check xyz("x y = z^(n+1) on flat samples");
  Check other("other v in {0,1,2}^n give multiplicity 0 or 1");
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const std::string tagn = "n=" + std::to_string(n);
    AdeSetup setup = ade_minimal_resolution_setup("A" + std::to_string(n));
    mult.run([&] { return predicted_component_count(setup.quiver, setup.v, setup.w) == static_cast<std::int64_t>(n); },
             [&] { return tagn; });
    dim.run([&] { return d_of(setup.quiver, setup.v, setup.w) == 2; }, [&] { return tagn; });

    ExampleBundle b = example_an(n, {seed + n, samples});
    for (const auto& p : b.points) {
      auto who = [&] { return tagn + " " + p.label; };
      if (p.label.rfind("broken", 0) == 0) {
        broken.run([&] {
          const FramedRep& x = p.rep;
          return is_flat(x) && zeta_pos_stable(x) && pi_fingerprint(x, default_fingerprint_length(x)).all_zero() &&
                 an_xyz(x).x == 0 && an_xyz(x).y == 0 && an_xyz(x).z == 0;
        }, who);
      } else {
        xyz.run([&] { return is_flat(p.rep) && an_xyz(p.rep).relation_ok; }, who);
      }
    }

    if (n <= 4) {
      RootSystemData rs = root_multiplicities(cartan_matrix(setup.quiver), 1);
      WeightSession session(rs);
      DimVector v(n);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
          if (v == setup.v) return;
          other.run([&] {
            auto m = session.multiplicity({setup.w, v});
            return m == 0 || m == 1;
          }, [&] { return tagn + " v=" + str(v); });
          return;
        }
        for (std::int64_t t = 0; t <= 2; ++t) {
          v[i] = t;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  out.checks = {mult.done(), dim.done(), broken.done(), xyz.done(), other.done()};
  return out;
}

SuiteResult verify_d4() {
  SuiteResult out{"d4", {}};
  AdeSetup setup = ade_minimal_resolution_setup("D4");
  Check mult("weight multiplicity at v=(1,2,1,1), w=e2 equals 4");
  Check dim("d(V,W) = 2");
  Check total("sum of weight multiplicities of L(varpi_2) equals 28");
  Check points("example points are flat, stable, with zero fingerprint");
  mult.run([&] { return predicted_component_count(setup.quiver, setup.v, setup.w) == 4; }, [] { return "D4"; });
  dim.run([&] { return d_of(setup.quiver, setup.v, setup.w) == 2; }, [] { return "D4"; });
  total.run([&] {
    RootSystemData rs = root_multiplicities(cartan_matrix(setup.quiver), 1);
    std::int64_t sum = 0;
    for (const auto& [v, m] : all_weights(rs, setup.w)) sum += m;
    return sum == 28;
  }, [] { return "so(8) adjoint"; });
  ExampleBundle b = example_d4();
  for (const auto& p : b.points) {
    points.run([&] {
      return is_flat(p.rep) && zeta_pos_stable(p.rep) && pi_fingerprint(p.rep, default_fingerprint_length(p.rep)).all_zero();
    }, [&] { return p.label; });
  }
  out.checks = {mult.done(), dim.done(), total.done(), points.done()};
  return out;
}

SuiteResult verify_complex(const RepCorpus& corpus) {
  SuiteResult out{"complex", {}};
  Check flat("corpus representations are flat");
  Check comp("beta * alpha = 0");
  Check dual("cohom_dim(x,y) = hom_dim(y,x)");
  Check sym("ext1_dim(x,y) = ext1_dim(y,x)");
  Check euler("hom - ext1 + cohom = -chi");
  for (const auto& g : corpus.groups) {
    for (std::size_t a = 0; a < g.reps.size(); ++a)
      flat.run([&] { return is_flat(g.reps[a]); }, [&] { return g.label + " #" + std::to_string(a); });
    for (std::size_t a = 0; a < g.reps.size(); ++a) {
      for (std::size_t b = 0; b < g.reps.size(); ++b) {
        const FramedRep& x = g.reps[a];
        const FramedRep& y = g.reps[b];
        auto who = [&] { return g.label + " (#" + std::to_string(a) + ", #" + std::to_string(b) + ")"; };
        Complex3 c = build_complex(x, y);
        Cohomology h = cohomology(c);
        comp.run([&] { return (c.beta * c.alpha).is_zero(); }, who);
        Cohomology rev = cohomology(y, x);
        dual.run([&] { return h.cohom == rev.hom; }, who);
        sym.run([&] { return h.ext1 == rev.ext1; }, who);
        euler.run([&] {
          const std::int64_t lhs = static_cast<std::int64_t>(h.hom) - h.ext1 + static_cast<std::int64_t>(h.cohom);
          return lhs == -chi(g.quiver->base(), x.dimV(), x.dimW(), y.dimV(), y.dimW());
        }, who);
      }
    }
  }
  out.checks = {flat.done(), comp.done(), dual.done(), sym.done(), euler.done()};
  return out;
}

SuiteResult verify_stability(const RepCorpus& corpus) {
  SuiteResult out{"stability", {}};
  Check present("corpus contains stable representations");
  Check stab("stable x has hom_dim(x,x) = 0");
  Check first("stable x has Hom(S_i, x) = 0 at every vertex");
  std::size_t stable = 0;
  for (const auto& g : corpus.groups) {
    for (std::size_t a = 0; a < g.reps.size(); ++a) {
      const FramedRep& x = g.reps[a];
      if (!zeta_pos_stable(x)) continue;
      ++stable;
      auto who = [&] { return g.label + " #" + std::to_string(a); };
      stab.run([&] { return hom_dim(x, x) == 0 && stabilizer_trivial(x); }, who);
      for (std::size_t i = 0; i < g.quiver->vertex_count(); ++i)
        first.run([&] { return hom_dim(simple_rep(g.quiver, i), x) == 0; },
                  [&] { return who() + " vertex " + g.quiver->base().vertices()[i]; });
    }
  }
  present.expect(stable > 0, [] { return "no stable representation in the corpus"; });
  out.checks = {present.done(), stab.done(), first.done()};
  return out;
}

SuiteResult verify_crystal(const RepCorpus& corpus) {
  SuiteResult out{"crystal", {}};
  ExampleBundle b = example_a2crystal();
  const FramedRep& generic = b.points.at(0).rep;
  const FramedRep& special = b.points.at(1).rep;

  Check eps("epsilon_1 = 0 at the generic point");
  Check ext("Ext^1(S_1, x) has dimension 1 (generic) and 2 (B12 = 0)");
  Check red("reduce at vertex 2 lands at dim V' = (1,0)");
  Check trip("extend after reduce returns an isomorphic representation");
  Check props("reduction is flat, stable, epsilon-free and keeps the fingerprint");
  Check ident("d(V,W) - d(V',W) = 2r(chi' - r) on every reduce/extend call");

  eps.run([&] { return epsilon_i(generic, 0) == 0; }, [] { return "generic"; });
  ext.run([&] { return ext_space_i(generic, 0, ExtSpaceMode::reduced_only).size() == 1; }, [] { return "generic"; });
  ext.run([&] { return ext_space_i(special, 0, ExtSpaceMode::any).size() == 2; }, [] { return "B12 = 0"; });

  auto round_trip = [&](const FramedRep& x, std::size_t i, const std::string& who) {
    ReductionResult r = reduce_i(x, i);
    trip.run([&] { return are_isomorphic(extend_i(r.reduced, i, r.classes), x); }, [&] { return who; });
    props.run([&] {
      const FramedRep& y = r.reduced;
      const std::size_t L = default_fingerprint_length(x);
      DimVector expect = x.dimV();
      expect[i] -= static_cast<std::int64_t>(r.r);
      return is_flat(y) && zeta_pos_stable(y) && epsilon_i(y, i) == 0 && pi_fingerprint(y, L) == pi_fingerprint(x, L) &&
             y.dimV() == expect;
    }, [&] { return who; });
    return r;
  };

  for (const auto& [x, label] : {std::pair{&generic, "generic"}, std::pair{&special, "B12 = 0"}}) {
    red.run([&] { return reduce_i(*x, 1).reduced.dimV() == DimVector{1, 0}; }, [&] { return std::string(label); });
    for (std::size_t i = 0; i < 2; ++i) round_trip(*x, i, std::string(label) + " vertex " + std::to_string(i + 1));
  }

  for (const auto& g : corpus.groups) {
    for (std::size_t a = 0; a < g.reps.size(); ++a) {
      const FramedRep& x = g.reps[a];
      if (!zeta_pos_stable(x)) continue;
      for (std::size_t i = 0; i < g.quiver->vertex_count(); ++i) {
        const std::string who = g.label + " #" + std::to_string(a) + " vertex " + g.quiver->base().vertices()[i];
        try {
          round_trip(x, i, who);
        } catch (const std::exception& e) {
          trip.expect(false, [&] { return who + " threw: " + e.what(); });
        }
      }
    }
  }

  IdentityTally t = identity_tally();
  ident.expect(t.checked > 0 && t.failed == 0, [&] {
    return std::to_string(t.failed) + " of " + std::to_string(t.checked) + " identity checks failed";
  });
  out.checks = {eps.done(), ext.done(), red.done(), trip.done(), props.done(), ident.done()};
  return out;
}

SuiteResult verify_cb(std::size_t samples, std::uint64_t seed) {
  SuiteResult out{"cb", {}};
  Check flat("transformed representation is flat at every vertex including the added one");
  Check ambient("entry count and dim M of the extended quiver equal dim M(V,W)");
  const std::vector<Quiver> shapes{a_quiver(2), a_quiver(3), d_quiver(4), kronecker_quiver()};
  SampleRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Quiver& base = shapes[s % shapes.size()];
    QuiverPtr q = make_quiver_ptr(base);
    const std::size_t n = base.vertex_count();
    SampleOptions opt;
    opt.extend_steps = static_cast<std::size_t>(rng.uniform(0, 3));
    const std::uint64_t sub = rng.engine()();
    FramedRep x = sample_flat(q, random_dims(n, 2, rng), random_nonzero_dims(n, 2, rng), sub, opt);
    auto who = [&] { return "sample " + std::to_string(s); };
    CbRep y = cb_apply(x);
    flat.run([&] { return is_flat(x) && is_flat(y.rep); }, who);
    ambient.run([&] {
      std::int64_t entries = 0;
      for (std::size_t k = 0; k < y.rep.quiver().arrows().size(); ++k)
        entries += static_cast<std::int64_t>(y.rep.B(k).rows() * y.rep.B(k).cols());
      const Quiver& cbq = y.transform.quiver;
      const std::int64_t expect = dim_bigM(base, x.dimV(), x.dimW());
      return entries == expect && dim_bigM(cbq, y.rep.dimV(), DimVector(cbq.vertex_count())) == expect;
    }, who);
  }
  out.checks = {flat.done(), ambient.done()};
  return out;
}

nlohmann::json suite_to_json(const SuiteResult& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"failures", c.failures}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"suite", s.name}, {"passed", s.passed()}, {"checks", checks}};
}

}  // namespace qvar
