#include "cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qvar/errors.hpp"
#include "qvar/examples.hpp"
#include "qvar/hecke.hpp"
#include "qvar/homext.hpp"
#include "qvar/invariants.hpp"
#include "qvar/io.hpp"
#include "qvar/kacmoody.hpp"
#include "qvar/stability.hpp"
#include "qvar/verify.hpp"

namespace qvar::cli {

namespace {

namespace fs = std::filesystem;

struct Loaded {
  json doc;
  InputRecord record;
  fs::path dir;
};

Loaded load(const std::string& path) {
  std::string text = read_text(path);
  Loaded l;
  l.doc = parse_json(text, path == "-" ? "standard input" : path);
  l.record = {path, fnv1a64(text)};
  l.dir = path == "-" ? fs::current_path() : fs::path(path).parent_path();
  return l;
}

// Inline JSON when the argument starts with '{' or '[', a file otherwise.
Loaded load_inline(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    Loaded l;
    l.doc = parse_json(arg, "command line");
    l.record = {"<inline>", fnv1a64(arg)};
    l.dir = fs::current_path();
    return l;
  }
  return load(arg);
}

std::optional<Quiver> named_quiver(const std::string& name) {
  if (name == "kronecker") return kronecker_quiver();
  if (name == "jordan") return jordan_quiver();
  if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (f == 'A') return a_quiver(n);
    if (f == 'D') return d_quiver(n);
    if (f == 'E') return e_quiver(n);
  }
  return std::nullopt;
}

Quiver load_quiver(const std::string& arg, std::vector<InputRecord>& inputs) {
  if (auto q = named_quiver(arg)) return *q;
  Loaded l = load_inline(arg);
  inputs.push_back(l.record);
  return quiver_from_json(l.doc.contains("quiver") ? l.doc.at("quiver") : l.doc);
}

DimVector load_dims(const Quiver& q, const std::string& arg, const std::string& what, std::vector<InputRecord>& inputs) {
  Loaded l = load_inline(arg);
  inputs.push_back(l.record);
  return dims_from_json(q, l.doc, what);
}

FramedRep load_rep(const std::string& path, const std::optional<std::string>& point, std::vector<InputRecord>& inputs) {
  Loaded l = load(path);
  inputs.push_back(l.record);
  return resolve_rep(l.doc, l.dir, point);
}

std::size_t vertex_of(const FramedRep& x, const std::string& name) { return x.quiver().base().vertex_index(name); }

json subspace_to_json(const Quiver& q, const GradedSubspace& s) {
  json basis = json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    json cols = json::array();
    for (const auto& v : s.basis[i]) {
      json col = json::array();
      for (const auto& e : v) col.push_back(rational_to_json(e));
      cols.push_back(std::move(col));
    }
    basis[q.vertices()[i]] = std::move(cols);
  }
  return {{"dims", dims_to_json(q, s.dims())}, {"basis", basis}};
}

json error_doc(const std::string& command, const std::string& kind, const std::string& message) {
  return {{"command", command}, {"version", kVersion}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with framed representations of preprojective algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::vector<InputRecord> inputs;
  std::optional<std::uint64_t> report_seed;
  std::function<json()> action;
  int verify_exit = 0;

  std::string rep_path = "-", rep_path2, point;
  auto rep_point = [&]() -> std::optional<std::string> {
    if (point.empty()) return std::nullopt;
    return point;
  };
  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("rep", rep_path, "representation, bundle or report (- for standard input)");
    sub->add_option("--point", point, "point of a bundle by index or label");
  };

  // check-moment
  auto* moment = app.add_subcommand("check-moment", "moment map and flatness");
  add_rep(moment);
  moment->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      GradedEndo mu = moment_map(x);
      const Quiver& q = x.quiver().base();
      json m = json::object();
      for (std::size_t i = 0; i < q.vertex_count(); ++i) m[q.vertices()[i]] = matrix_to_json(mu.blocks[i]);
      return json{{"flat", mu.is_zero()}, {"mu", m}};
    };
  });

  // hom-ext
  bool with_reps = false;
  auto* homext = app.add_subcommand("hom-ext", "cohomology of the three-term complex of a pair");
  homext->add_option("first", rep_path, "first representation")->required();
  homext->add_option("second", rep_path2, "second representation (default: the first)");
  homext->add_flag("--reps", with_reps, "include Ext^1 representatives");
  homext->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, std::nullopt, inputs);
      FramedRep y = rep_path2.empty() ? x : load_rep(rep_path2, std::nullopt, inputs);
      Complex3 c = build_complex(x, y);
      Cohomology h = cohomology(c);
      EulerCheck e = euler_check(x, y);
      Cohomology back = cohomology(y, x);
      const bool duality = h.cohom == back.hom && h.ext1 == back.ext1;
      json r = {{"hom", h.hom},
                {"ext1", h.ext1},
                {"cohom", h.cohom},
                {"complex_dims", {h.end1, h.middle, h.end2}},
                {"is_complex", h.is_complex},
                {"inputs_flat", h.inputs_flat},
                {"chi", e.formula},
                {"duality_ok", duality},
                {"euler_ok", e.equal}};
      if (with_reps) {
        json reps = json::array();
        for (const auto& v : ext1_reps(c)) {
          json row = json::array();
          for (const auto& t : v) row.push_back(rational_to_json(t));
          reps.push_back(std::move(row));
        }
        r["ext1_reps"] = reps;
        r["layout"] = c.layout.describe(x.quiver());
      }
      return r;
    };
  });

  // stability
  std::string zeta_arg = "pos";
  auto* stab = app.add_subcommand("stability", "zeta-stability for a sign-definite parameter");
  add_rep(stab);
  stab->add_option("--zeta", zeta_arg, "pos, neg, or a JSON object vertex -> number (file or inline)");
  stab->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      const Quiver& q = x.quiver().base();
      ZetaParam z;
      if (zeta_arg == "pos") z = ZetaParam::constant(q.vertex_count(), 1);
      else if (zeta_arg == "neg") z = ZetaParam::constant(q.vertex_count(), -1);
      else {
        Loaded l = load_inline(zeta_arg);
        inputs.push_back(l.record);
        z = zeta_from_json(q, l.doc);
      }
      StabilityResult s = is_stable(x, z);
      json r = {{"verdict", s.verdict == Verdict::stable ? "stable" : "unstable"},
                {"zeta_sign", z.sign() == ZetaSign::positive ? "positive" : "negative"}};
      r["witness_dims"] = s.witness ? dims_to_json(q, s.witness->dims()) : json(nullptr);
      if (s.witness) r["witness"] = subspace_to_json(q, *s.witness);
      r["stabilizer_trivial"] = stabilizer_trivial(x);
      return r;
    };
  });

  // dim
  std::string quiver_arg, dimv_arg, dimw_arg;
  auto* dim = app.add_subcommand("dim", "dim M(V,W) and d(V,W)");
  dim->add_option("--quiver", quiver_arg, "named quiver (A3, D4, E6, kronecker, jordan), file or inline JSON")->required();
  dim->add_option("--dimV", dimv_arg, "dimension vector (file or inline JSON)")->required();
  dim->add_option("--dimW", dimw_arg, "framing dimension vector (file or inline JSON)")->required();
  dim->callback([&] {
    action = [&] {
      Quiver q = load_quiver(quiver_arg, inputs);
      DimVector v = load_dims(q, dimv_arg, "dimV", inputs), w = load_dims(q, dimw_arg, "dimW", inputs);
      return json{{"dim_M", dim_bigM(q, v, w)}, {"d", d_of(q, v, w)}, {"cartan", cartan_matrix(q)}};
    };
  });

  // chi
  std::string v1_arg, w1_arg, v2_arg, w2_arg;
  auto* chic = app.add_subcommand("chi", "Euler characteristic of the complex for given dimensions");
  chic->add_option("--quiver", quiver_arg, "named quiver, file or inline JSON")->required();
  chic->add_option("--v1", v1_arg)->required();
  chic->add_option("--w1", w1_arg)->required();
  chic->add_option("--v2", v2_arg)->required();
  chic->add_option("--w2", w2_arg)->required();
  chic->callback([&] {
    action = [&] {
      Quiver q = load_quiver(quiver_arg, inputs);
      DimVector v1 = load_dims(q, v1_arg, "v1", inputs), w1 = load_dims(q, w1_arg, "w1", inputs);
      DimVector v2 = load_dims(q, v2_arg, "v2", inputs), w2 = load_dims(q, w2_arg, "w2", inputs);
      return json{{"chi", chi(q, v1, w1, v2, w2)}};
    };
  });

  // invariants
  std::optional<std::size_t> max_length;
  auto* inv = app.add_subcommand("invariants", "cycle traces and framed path invariants");
  add_rep(inv);
  inv->add_option("--max-length", max_length, "path length bound (default 2 * sum dim V)");
  inv->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      const std::size_t L = max_length.value_or(default_fingerprint_length(x));
      InvariantFingerprint f = pi_fingerprint(x, L);
      json entries = json::array();
      for (const auto& [label, value] : f.entries) entries.push_back({label, rational_to_json(value)});
      return json{{"max_length", L}, {"all_zero", f.all_zero()}, {"fingerprint", entries}};
    };
  });

  // reduce
  std::string vertex_name;
  auto* red = app.add_subcommand("reduce", "kernel of x -> Hom(x, S_i)^dual (x) S_i");
  add_rep(red);
  red->add_option("--vertex", vertex_name, "vertex name")->required();
  red->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      const std::size_t i = vertex_of(x, vertex_name);
      ReductionResult r = reduce_i(x, i);
      const Quiver& q = x.quiver().base();
      json incl = json::object();
      for (std::size_t v = 0; v < q.vertex_count(); ++v) incl[q.vertices()[v]] = matrix_to_json(r.inclusion.blocks[v]);
      return json{{"vertex", vertex_name},
                  {"r", r.r},
                  {"rep", rep_to_json(r.reduced)},
                  {"inclusion", incl},
                  {"cocycles", classes_to_json(r.reduced, i, r.classes)},
                  {"d_before", r.d_before},
                  {"d_after", r.d_after},
                  {"chi_reduced", r.chi_reduced}};
    };
  });

  // extend
  std::string classes_path;
  auto* ext = app.add_subcommand("extend", "extension of x' by Ext^1(S_i, x') classes");
  add_rep(ext);
  ext->add_option("--vertex", vertex_name, "vertex name")->required();
  ext->add_option("--classes", classes_path, "cocycle file (or a reduce report)")->required();
  ext->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      const std::size_t i = vertex_of(x, vertex_name);
      Loaded l = load(classes_path);
      inputs.push_back(l.record);
      auto classes = classes_from_json(l.doc, x, i);
      FramedRep y = extend_i(x, i, classes);
      return json{{"vertex", vertex_name}, {"r", classes.size()}, {"rep", rep_to_json(y)}};
    };
  });

  // ext-space is exposed through extend's inputs; the classes can also be listed here
  bool any_mode = false;
  auto* exts = app.add_subcommand("ext-space", "basis of Ext^1(S_i, x) as a cocycle file");
  add_rep(exts);
  exts->add_option("--vertex", vertex_name, "vertex name")->required();
  exts->add_flag("--any", any_mode, "allow Hom(x, S_i) != 0");
  exts->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      const std::size_t i = vertex_of(x, vertex_name);
      auto classes = ext_space_i(x, i, any_mode ? ExtSpaceMode::any : ExtSpaceMode::reduced_only);
      return json{{"dimension", classes.size()}, {"epsilon", epsilon_i(x, i)}, {"cocycles", classes_to_json(x, i, classes)}};
    };
  });

  // weight-mult
  std::optional<std::int64_t> cutoff;
  auto* wm = app.add_subcommand("weight-mult", "multiplicity of lambda - sum v_i alpha_i in L(lambda)");
  wm->add_option("--quiver", quiver_arg, "named quiver, file or inline JSON")->required();
  wm->add_option("--dimV", dimv_arg)->required();
  wm->add_option("--dimW", dimw_arg)->required();
  wm->add_option("--cutoff", cutoff, "root height cutoff (default sum dim V + 8)");
  wm->callback([&] {
    action = [&] {
      Quiver q = load_quiver(quiver_arg, inputs);
      DimVector v = load_dims(q, dimv_arg, "dimV", inputs), w = load_dims(q, dimw_arg, "dimW", inputs);
      if (q.has_edge_loops()) throw DomainError("Kac-Moody data needs a quiver without edge loops");
      const IntMatrix a = cartan_matrix(q);
      json h = json::object();
      for (std::size_t i = 0; i < q.vertex_count(); ++i) h[q.vertices()[i]] = h_eigenvalue(q, v, w, i);
      return json{{"multiplicity", predicted_component_count(q, v, w, cutoff)},
                  {"weight", {{"dimV", dims_to_json(q, v)}, {"dimW", dims_to_json(q, w)}, {"h", h}}},
                  {"finite_type", is_finite_type(a)},
                  {"d", d_of(q, v, w)}};
    };
  });

  // cb-transform
  auto* cb = app.add_subcommand("cb-transform", "unframed representation of the extended quiver");
  add_rep(cb);
  cb->callback([&] {
    action = [&] {
      FramedRep x = load_rep(rep_path, rep_point(), inputs);
      CbRep y = cb_apply(x);
      return json{{"infinity", y.transform.quiver.vertices()[y.transform.infinity]},
                  {"rep", rep_to_json(y.rep)},
                  {"flat", is_flat(y.rep)}};
    };
  });

  // example
  std::string example_name, label;
  std::size_t ex_n = 2, ex_k = 1, samples = 0;
  std::optional<std::uint64_t> seed;
  auto* exm = app.add_subcommand("example", "named example configurations: a1, an, d4, a2crystal, ade");
  exm->add_option("name", example_name)->required()->check(CLI::IsMember({"a1", "an", "d4", "a2crystal", "ade"}));
  exm->add_option("--n", ex_n, "rank (an) or dim W (a1)");
  exm->add_option("--k", ex_k, "dim V (a1)");
  exm->add_option("--label", label, "ADE label for 'ade' (A3, D5, E6, ...)");
  exm->add_option("--samples", samples, "number of seeded samples (a1, an)");
  exm->add_option("--seed", seed, "sampling seed (required with --samples)");
  exm->callback([&] {
    action = [&] {
      if (samples > 0 && !seed) throw InputError("--samples needs --seed");
      SampleRequest req{seed, samples};
      report_seed = samples > 0 ? seed : std::nullopt;
      ExampleBundle b;
      if (example_name == "a1") b = example_a1(ex_n, ex_k, req);
      else if (example_name == "an") b = example_an(ex_n, req);
      else if (example_name == "d4") b = example_d4();
      else if (example_name == "a2crystal") b = example_a2crystal();
      else {
        if (label.empty()) throw InputError("example ade needs --label");
        b = example_ade(label);
      }
      return json{{"bundle", bundle_to_json(b)}};
    };
  });

  // verify
  std::string suite;
  std::optional<std::size_t> vn;
  std::optional<std::uint64_t> vseed;
  auto* ver = app.add_subcommand("verify", "acceptance suites: sl2, an, d4, complex, stability, crystal, cb, all");
  ver->add_option("suite", suite)->required()->check(
      CLI::IsMember({"sl2", "an", "d4", "complex", "stability", "crystal", "cb", "all"}));
  ver->add_option("--n", vn, "restrict 'an' to one rank / 'sl2' to dim W up to n");
  ver->add_option("--seed", vseed, "override the suite seeds");
  ver->callback([&] {
    action = [&] {
      const std::uint64_t s = vseed.value_or(0);
      report_seed = vseed;
      std::vector<SuiteResult> results;
      std::optional<RepCorpus> corpus;
      auto get_corpus = [&]() -> const RepCorpus& {
        if (!corpus) corpus = build_corpus(s + 11);
        return *corpus;
      };
      const bool all = suite == "all";
      if (all || suite == "sl2") results.push_back(verify_sl2(vn.value_or(6), 50, s + 1));
      if (all || suite == "an") results.push_back(vn ? verify_an(*vn, *vn, 50, s + 2) : verify_an(2, 6, 50, s + 2));
      if (all || suite == "d4") results.push_back(verify_d4());
      if (all || suite == "complex") results.push_back(verify_complex(get_corpus()));
      if (all || suite == "stability") results.push_back(verify_stability(get_corpus()));
      if (all || suite == "crystal") results.push_back(verify_crystal(get_corpus()));
      if (all || suite == "cb") results.push_back(verify_cb(100, s + 7));
      json arr = json::array();
      bool ok = true;
      for (const auto& r : results) {
        arr.push_back(suite_to_json(r));
        ok = ok && r.passed();
      }
      verify_exit = ok ? 0 : 2;
      json r = {{"passed", ok}, {"suites", arr}};
      if (corpus) r["corpus"] = {{"representations", corpus->rep_count()}, {"pairs", corpus->pair_count()}};
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    json result = action();
    out << make_report(command, inputs, std::move(result), report_seed).dump(2) << '\n';
    return verify_exit;
  } catch (const DomainError& e) {
    out << error_doc(command, "domain", e.what()).dump(2) << '\n';
    return 2;
  } catch (const InputError& e) {
    out << error_doc(command, "input", e.what()).dump(2) << '\n';
    return 1;
  } catch (const DimensionError& e) {
    out << error_doc(command, "input", e.what()).dump(2) << '\n';
    return 1;
  } catch (const json::exception& e) {
    out << error_doc(command, "input", e.what()).dump(2) << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    out << error_doc(command, "internal", e.what()).dump(2) << '\n';
    return 2;
  }
}

}  // namespace qvar::cli
