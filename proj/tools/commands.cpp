#include "commands.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vcldim/biclique.hpp"
#include "vcldim/dimensions.hpp"
#include "vcldim/error.hpp"
#include "vcldim/formats.hpp"
#include "vcldim/learners.hpp"
#include "vcldim/pipeline.hpp"
#include "vcldim/reductions.hpp"

namespace vcldim::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string render(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    std::ostringstream s;
    s << v.get<double>();
    return s.str();
  }
  if (v.is_array()) {
    if (v.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ',';
      out += render(v[i]);
    }
    return out;
  }
  return v.dump();
}

json index_list(const std::vector<std::size_t>& v) { return json(v); }

std::string cert_path(const std::string& out) {
  fs::path p(out);
  p.replace_extension(".cert");
  if (p == fs::path(out)) throw InvalidArgument("output path must not end in .cert");
  return p.string();
}

ConceptClass load_class(const std::string& path) { return parse_concept_class(read_file(path)); }
BipartiteGraph load_bigraph(const std::string& path) { return parse_bigraph(read_file(path)); }
UndirectedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void warn_violations(const ReductionCertificate& cert, std::ostream& err) {
  for (const auto& c : cert.checks) {
    if (c.satisfied && !*c.satisfied) err << "warning: " << cert.reduction << ": " << c.name << " violated\n";
  }
}

void write_with_cert(const std::string& out, const std::string& body, const ReductionCertificate& cert,
                     Report& report, std::ostream& err) {
  const std::string cp = cert_path(out);
  write_file(out, body);
  write_file(cp, serialize_certificate(cert));
  warn_violations(cert, err);
  report.add("output", out);
  report.add("certificate", cp);
}

std::string tree_path(std::size_t node, const std::vector<int>& parent,
                      const std::vector<int>& edge) {
  std::string path;
  for (int v = static_cast<int>(node); parent[v] >= 0; v = parent[v]) path.insert(path.begin(), char('0' + edge[v]));
  return path.empty() ? "." : path;
}

void add_tree(Report& out, const MistakeTree& tree) {
  std::vector<int> parent(tree.nodes.size(), -1), edge(tree.nodes.size(), 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (int y = 0; y < 2; ++y) {
      const int c = tree.nodes[i].child[y];
      if (c >= 0) {
        parent[c] = static_cast<int>(i);
        edge[c] = y;
      }
    }
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    out.add("node", tree_path(i, parent, edge) + " " + std::to_string(tree.nodes[i].point));
  }
}

void add_witness(Report& out, const BicliqueWitness& w) {
  out.add("side_a", index_list(w.side_a));
  out.add("side_b", index_list(w.side_b));
}

// Optional precondition parameters shared by the product commands.
struct LemmaFlags {
  std::size_t q1 = 0, q2 = 0, t1 = 0, t2 = 0;
  double delta = 0.0;
  CLI::Option *o_q1 = nullptr, *o_q2 = nullptr, *o_t1 = nullptr, *o_t2 = nullptr, *o_delta = nullptr;

  void attach(CLI::App* app, bool with_delta) {
    o_q1 = app->add_option("--q1", q1, "YES-side biclique size of the input");
    o_q2 = app->add_option("--q2", q2, "NO-side biclique size of the input");
    o_t1 = app->add_option("--t1", t1, "YES-side exponent of the output");
    o_t2 = app->add_option("--t2", t2, "NO-side exponent of the output");
    if (with_delta) o_delta = app->add_option("--delta", delta, "hypothesis constant; gamma = delta/2");
  }
  LemmaParams get() const {
    LemmaParams p;
    if (o_q1->count()) p.q1 = q1;
    if (o_q2->count()) p.q2 = q2;
    if (o_t1->count()) p.t1 = t1;
    if (o_t2->count()) p.t2 = t2;
    if (o_delta && o_delta->count()) p.delta = delta;
    return p;
  }
};

struct Globals {
  std::uint64_t seed = 0;
  bool json = false;
  double tolerance = kDefaultTolerance;
  std::size_t budget = kDefaultBudget;
};

using Action = std::function<int(Report&)>;

}  // namespace

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " " + render(v) + "\n";
  return out;
}

std::string Report::json() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& e : entries_) ++counts[e.first];
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entries_) {
    if (counts[k] > 1) {
      if (!obj.contains(k)) obj[k] = nlohmann::ordered_json::array();
      obj[k].push_back(v);
    } else {
      obj[k] = v;
    }
  }
  return obj.dump() + "\n";
}

void add_verification(Report& out, const VerificationReport& r) {
  out.add("lemma_id", r.lemma_id);
  out.add("trials", r.trials);
  out.add("successes", r.successes);
  out.add("empirical_rate", r.empirical_rate());
  out.add("paper_bound", r.paper_bound);
  out.add("tolerance", r.tolerance);
  out.add("deterministic", r.deterministic);
  for (const auto& [k, v] : r.extra) out.add(k, v);
  out.add("pass", r.pass());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact VC / Littlestone dimension and biclique reductions", "vcldim"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_flag("--json", g.json, "print the report as one JSON object");
  app.add_option("--tolerance", g.tolerance, "Monte-Carlo slack below a probability bound");
  app.add_option("--budget", g.budget, "enumeration budget for products and disperser checks");

  Action action;
  std::string file, output;
  std::size_t a = 0, b = 0, t = 0, cap = 0, d1 = 0, d2 = 0, q1 = 0, q2 = 0, t1 = 0, t2 = 0;
  std::size_t n = 0, ell = 1, lr = 2, trials = 1000, target = 0, kappa = 0, base_n = 0, max_m = 1;
  std::size_t n_vertices = 32;
  double gamma = 0.0;
  std::string p_text = "1/2", sequence;
  std::vector<std::size_t> set;
  bool multiset = false, optimal = false, max_balanced = false, two_sided = false, no_product = false;
  LemmaFlags lemma;

  // --- dimensions
  auto* vc = app.add_subcommand("vc", "exact VC dimension with a shattered witness");
  vc->add_option("FILE", file, "concept class")->required();
  vc->callback([&] {
    action = [&](Report& r) {
      const VcReport v = vc_dimension(load_class(file));
      r.add("value", v.value);
      r.add("witness", index_list(v.witness));
      return kOk;
    };
  });

  auto* ld = app.add_subcommand("ldim", "exact Littlestone dimension with a mistake tree");
  ld->add_option("FILE", file, "concept class")->required();
  ld->callback([&] {
    action = [&](Report& r) {
      const LdimReport v = ldim(load_class(file));
      r.add("value", v.value);
      add_tree(r, v.witness);
      return kOk;
    };
  });

  auto* sh = app.add_subcommand("shatters", "test whether a point set is shattered");
  sh->add_option("FILE", file, "concept class")->required();
  sh->add_option("--set", set, "points, e.g. 0,2,3")->delimiter(',')->required();
  sh->callback([&] {
    action = [&](Report& r) {
      r.add("set", index_list(set));
      r.add("shattered", shatters(load_class(file), set));
      return kOk;
    };
  });

  // --- bicliques
  auto* bc = app.add_subcommand("biclique", "biclique search on a bipartite graph");
  bc->add_option("FILE", file, "bipartite graph")->required();
  auto* o_a = bc->add_option("--a", a, "A-side size");
  auto* o_b = bc->add_option("--b", b, "B-side size");
  auto* o_exp = bc->add_option("--exp-t", t, "search K_{t,2^t}");
  auto* o_max = bc->add_flag("--max-balanced", max_balanced, "largest K_{k,k} up to --cap");
  auto* o_cap = bc->add_option("--cap", cap, "upper limit for --max-balanced");
  o_a->needs(o_b);
  o_b->needs(o_a);
  o_max->needs(o_cap);
  o_exp->excludes(o_a)->excludes(o_max);
  o_max->excludes(o_a);
  bc->callback([&] {
    action = [&](Report& r) {
      const BipartiteGraph gr = load_bigraph(file);
      if (max_balanced) {
        r.add("value", max_balanced_biclique(gr, cap));
        return kOk;
      }
      std::optional<BicliqueWitness> w;
      if (o_exp->count()) {
        w = contains_exponential_biclique(gr, t);
      } else if (o_a->count()) {
        w = contains_biclique(gr, a, b);
      } else {
        throw InvalidArgument("biclique: give --a/--b, --exp-t or --max-balanced");
      }
      r.add("present", w.has_value());
      if (w) add_witness(r, *w);
      return kOk;
    };
  });

  auto* vd = app.add_subcommand("verdict", "gap-problem verdicts (YES / NO / NEITHER)");
  vd->require_subcommand(1);
  auto* vd_b = vd->add_subcommand("biclique", "YES: K_{q1,q1} present; NO: K_{q2,q2}-free");
  vd_b->add_option("FILE", file, "bipartite graph")->required();
  vd_b->add_option("--q1", q1)->required();
  vd_b->add_option("--q2", q2)->required();
  vd_b->callback([&] {
    action = [&](Report& r) {
      r.add("verdict", std::string(to_string(gap_biclique_verdict(load_bigraph(file), q1, q2))));
      return kOk;
    };
  });
  auto* vd_e = vd->add_subcommand("exp-biclique", "YES: K_{t1,2^t1} present; NO: K_{t2,2^t2}-free");
  vd_e->add_option("FILE", file, "bipartite graph")->required();
  vd_e->add_option("--t1", t1)->required();
  vd_e->add_option("--t2", t2)->required();
  vd_e->callback([&] {
    action = [&](Report& r) {
      r.add("verdict", std::string(to_string(gap_exp_biclique_verdict(load_bigraph(file), t1, t2))));
      return kOk;
    };
  });
  auto* vd_v = vd->add_subcommand("vcldim", "YES: VC >= d1; NO: Ldim < d2");
  vd_v->add_option("FILE", file, "concept class")->required();
  vd_v->add_option("--d1", d1)->required();
  vd_v->add_option("--d2", d2)->required();
  vd_v->callback([&] {
    action = [&](Report& r) {
      r.add("verdict", std::string(to_string(gap_vcldim_verdict(load_class(file), d1, d2))));
      return kOk;
    };
  });

  // --- reductions
  auto* rd = app.add_subcommand("reduce", "reductions between gap problems");
  rd->require_subcommand(1);
  auto* rd_f = rd->add_subcommand("flip", "edge-flip reduction: bipartite graph -> concept class");
  rd_f->add_option("FILE", file, "bipartite graph")->required();
  rd_f->add_option("-o,--output", output, "output concept class")->required();
  rd_f->callback([&] {
    action = [&](Report& r) {
      const BipartiteGraph gr = load_bigraph(file);
      RandomSource rng(g.seed);
      const ReductionCertificate cert = flip_certificate(gr, rng);
      const ConceptClass c = flip_reduction(gr, rng);
      r.add("points", c.n_points());
      r.add("concepts", c.n_concepts());
      write_with_cert(output, serialize_concept_class(c), cert, r, err);
      return kOk;
    };
  });
  auto* rd_e = rd->add_subcommand("embed", "trivial embedding: d1 -> floor(log2 d1)");
  rd_e->add_option("--d1", d1)->required();
  rd_e->callback([&] {
    action = [&](Report& r) {
      r.add("d1", d1);
      r.add("t1", trivial_embed_params(d1));
      return kOk;
    };
  });

  auto* pr = app.add_subcommand("product", "graph products that amplify biclique gaps");
  pr->require_subcommand(1);
  auto* pr_1 = pr->add_subcommand("one-sided", "B' = l_R-tuples over B");
  pr_1->add_option("FILE", file, "bipartite graph")->required();
  pr_1->add_option("--lr", lr, "tuple length l_R")->required();
  pr_1->add_option("-o,--output", output, "output bipartite graph")->required();
  pr_1->add_flag("--multiset", multiset, "one vertex per multiset instead of per ordered tuple");
  LemmaFlags lemma1;
  lemma1.attach(pr_1, false);
  pr_1->callback([&] {
    action = [&](Report& r) {
      const ProductResult p = one_sided_product(load_bigraph(file), lr, lemma1.get(),
                                                multiset ? TupleMode::kMultiset : TupleMode::kOrdered, g.budget);
      r.add("A", p.graph.n_a());
      r.add("B", p.graph.n_b());
      r.add("edges", p.graph.edge_count());
      write_with_cert(output, serialize_bigraph(p.graph), p.certificate, r, err);
      return kOk;
    };
  });
  auto* pr_2 = pr->add_subcommand("two-sided", "n sampled l-tuples on both sides");
  pr_2->add_option("FILE", file, "bipartite graph")->required();
  pr_2->add_option("--n", n, "tuples per side")->required();
  pr_2->add_option("--ell", ell, "tuple length l")->required();
  pr_2->add_option("-o,--output", output, "output bipartite graph")->required();
  lemma.attach(pr_2, true);
  pr_2->callback([&] {
    action = [&](Report& r) {
      RandomSource rng(g.seed);
      const ProductResult p = two_sided_product(load_bigraph(file), n, ell, rng, lemma.get(), g.budget);
      r.add("A", p.graph.n_a());
      r.add("B", p.graph.n_b());
      r.add("edges", p.graph.edge_count());
      write_with_cert(output, serialize_bigraph(p.graph), p.certificate, r, err);
      return kOk;
    };
  });

  // --- generators
  auto* gn = app.add_subcommand("gen", "instance generators");
  gn->require_subcommand(1);
  auto* gn_g = gn->add_subcommand("gnp", "G(n, p), optionally with a planted clique");
  gn_g->add_option("--n", n, "vertices")->required();
  gn_g->add_option("--p", p_text, "edge probability, e.g. 1/2 or 0.25");
  gn_g->add_option("--plant", kappa, "planted clique size");
  gn_g->add_option("-o,--output", output, "output graph")->required();
  gn_g->callback([&] {
    action = [&](Report& r) {
      const Probability p = parse_probability(p_text);
      if (kappa > n) throw InvalidArgument("planted clique larger than the graph");
      RandomSource rng(g.seed);
      const PlantedGraph pg = sample_planted(n, p, kappa, rng);
      ReductionCertificate cert;
      cert.reduction = "gnp";
      cert.add_param("seed", std::to_string(g.seed));
      cert.add_param("N", std::to_string(n));
      cert.add_param("p", format_probability(p));
      cert.add_param("kappa", std::to_string(kappa));
      cert.add_param("planted", render(index_list(pg.planted)));
      if (kappa > 0) cert.checks.push_back({"planted set is a clique", pg.graph.is_clique(pg.planted)});
      r.add("vertices", pg.graph.size());
      r.add("edges", pg.graph.edge_count());
      r.add("planted", index_list(pg.planted));
      write_with_cert(output, serialize_graph(pg.graph), cert, r, err);
      return kOk;
    };
  });
  auto* gn_c = gn->add_subcommand("clique-to-biclique", "folklore reduction: graph -> bipartite graph");
  gn_c->add_option("FILE", file, "graph")->required();
  gn_c->add_option("-o,--output", output, "output bipartite graph")->required();
  gn_c->callback([&] {
    action = [&](Report& r) {
      const UndirectedGraph gr = load_graph(file);
      const BipartiteGraph bg = folklore_clique_to_biclique(gr);
      ReductionCertificate cert;
      cert.reduction = "clique-to-biclique";
      cert.add_param("N", std::to_string(gr.size()));
      cert.notes.push_back("a kappa-clique maps to K_{kappa,kappa} on the same vertices");
      r.add("A", bg.n_a());
      r.add("B", bg.n_b());
      r.add("edges", bg.edge_count());
      write_with_cert(output, serialize_bigraph(bg), cert, r, err);
      return kOk;
    };
  });

  // --- Monte-Carlo verification
  auto* vf = app.add_subcommand("verify", "seeded Monte-Carlo checks of the reduction guarantees");
  vf->require_subcommand(1);
  auto finish = [&](Report& r, const VerificationReport& v) {
    add_verification(r, v);
    for (const auto& [k, val] : v.extra) {
      if (k == "warning") err << "warning: " << v.lemma_id << ": " << val << '\n';
    }
    return v.pass() ? kOk : kVerificationFailed;
  };
  auto* vf_r = vf->add_subcommand("vc-random", "VC of 2^t random concepts on t points");
  vf_r->add_option("--t", t)->required();
  vf_r->add_option("--trials", trials);
  vf_r->callback([&] {
    action = [&](Report& r) { return finish(r, verify_vc_random(t, trials, g.seed, g.tolerance)); };
  });
  auto* vf_f = vf->add_subcommand("flip", "completeness / soundness of the edge-flip reduction");
  vf_f->add_option("FILE", file, "bipartite graph")->required();
  vf_f->add_option("--d1", d1)->required();
  vf_f->add_option("--d2", d2)->required();
  vf_f->add_option("--trials", trials);
  vf_f->callback([&] {
    action = [&](Report& r) {
      const FlipVerification v = verify_flip(load_bigraph(file), d1, d2, trials, g.seed, g.tolerance);
      r.add("promise", std::string(to_string(v.promise)));
      if (v.completeness) return finish(r, *v.completeness);
      if (v.soundness) return finish(r, *v.soundness);
      r.add("note", "outside promise; no bound claimed");
      return kOk;
    };
  });
  auto* vf_d = vf->add_subcommand("disperser", "union lower bound for sampled tuples");
  vf_d->add_option("--N", base_n, "base set size")->required();
  vf_d->add_option("--n", n, "number of tuples")->required();
  vf_d->add_option("--ell", ell, "tuple length")->required();
  vf_d->add_option("--gamma", gamma)->required();
  vf_d->add_option("--max-m", max_m)->required();
  vf_d->add_option("--trials", trials);
  vf_d->callback([&] {
    action = [&](Report& r) {
      return finish(r, verify_disperser(base_n, n, ell, gamma, max_m, trials, g.seed, g.tolerance, g.budget));
    };
  });
  auto* vf_t = vf->add_subcommand("two-sided", "two-sided product keeps a K_{target,target}");
  vf_t->add_option("FILE", file, "bipartite graph")->required();
  vf_t->add_option("--n", n)->required();
  vf_t->add_option("--ell", ell)->required();
  vf_t->add_option("--target", target)->required();
  vf_t->add_option("--trials", trials);
  vf_t->callback([&] {
    action = [&](Report& r) {
      return finish(r, verify_two_sided(load_bigraph(file), n, ell, target, trials, g.seed, g.tolerance, g.budget));
    };
  });
  auto* vf_c = vf->add_subcommand("folklore", "clique-to-biclique on planted / plain G(N,1/2)");
  vf_c->add_option("--N", n_vertices)->required();
  vf_c->add_option("--kappa", kappa, "planted size; 0 checks the plain random bound");
  vf_c->add_option("--trials", trials);
  vf_c->callback([&] {
    action = [&](Report& r) {
      return finish(r, kappa > 0 ? verify_folklore_planted(n_vertices, kappa, trials, g.seed)
                                 : verify_folklore_random(n_vertices, trials, g.seed));
    };
  });

  // --- learners
  auto* ln = app.add_subcommand("learn", "online learners");
  ln->require_subcommand(1);
  auto* ln_r = ln->add_subcommand("run", "replay a labeled sequence through the two-stage learner");
  ln_r->add_option("FILE", file, "concept class")->required();
  ln_r->add_option("--t", t)->required();
  ln_r->add_option("--sequence", sequence, "e.g. 0:1,2:0")->required();
  ln_r->callback([&] {
    action = [&](Report& r) {
      const ConceptClass c = load_class(file);
      const MistakeReport m = run_learner(c, t, parse_sequence(sequence));
      r.add("mistakes", m.mistakes);
      r.add("threshold_mistakes", threshold_stage_mistakes(c, t, m));
      for (const auto& e : m.transcript) {
        r.add("step", std::to_string(e.point) + " " + (e.prediction ? "1" : "0") + " " + (e.label ? "1" : "0"));
      }
      return kOk;
    };
  });
  auto* ln_w = ln->add_subcommand("worst-case", "exhaustive adversary against a learner");
  ln_w->add_option("FILE", file, "concept class")->required();
  auto* o_lt = ln_w->add_option("--t", t, "two-stage learner parameter");
  auto* o_opt = ln_w->add_flag("--optimal", optimal, "standard optimal algorithm instead");
  o_lt->excludes(o_opt);
  ln_w->callback([&] {
    action = [&](Report& r) {
      const ConceptClass c = load_class(file);
      if (!optimal && !o_lt->count()) throw InvalidArgument("learn worst-case: give --t or --optimal");
      const Learner learner = optimal ? make_optimal_learner(c) : make_biclique_learner(c, t);
      const MistakeReport m = worst_case_mistakes(c, learner);
      r.add("learner", learner.name);
      r.add("mistakes", m.mistakes);
      LabeledSequence seq;
      for (const auto& e : m.transcript) seq.push_back({e.point, e.label});
      r.add("sequence", seq.empty() ? std::string("-") : format_sequence(seq));
      if (!optimal) {
        const bool free = !contains_exponential_biclique(class_to_graph(c), t).has_value();
        r.add("biclique_free", free);
        r.add("below_2t", m.mistakes < 2 * t);
      }
      return kOk;
    };
  });

  // --- pipeline
  auto* pl = app.add_subcommand("pipeline", "planted clique -> biclique -> product -> flip, with certificates");
  pl->add_option("--N", n_vertices, "vertices of the planted-clique graph");
  pl->add_option("--p", p_text, "edge probability");
  pl->add_option("--kappa", kappa, "planted clique size (0: none)");
  pl->add_option("--lr", lr, "one-sided product tuple length");
  pl->add_flag("--multiset", multiset, "multiset vertices in the one-sided product");
  pl->add_flag("--two-sided", two_sided, "use the two-sided product");
  pl->add_flag("--no-product", no_product, "flip the biclique instance directly");
  pl->add_option("--n", n, "two-sided: tuples per side");
  pl->add_option("--ell", ell, "two-sided: tuple length");
  LemmaFlags lemma_pl;
  lemma_pl.attach(pl, true);
  pl->add_option("--d1", d1)->required();
  pl->add_option("--d2", d2)->required();
  pl->add_option("-o,--output", output, "output directory")->required();
  pl->callback([&] {
    action = [&](Report& r) {
      PipelineConfig cfg;
      cfg.seed = g.seed;
      cfg.n_vertices = n_vertices;
      cfg.p = parse_probability(p_text);
      cfg.kappa = kappa;
      if (two_sided && no_product) throw InvalidArgument("pipeline: --two-sided and --no-product conflict");
      cfg.product = two_sided ? ProductKind::kTwoSided : no_product ? ProductKind::kNone : ProductKind::kOneSided;
      cfg.ell_r = lr;
      cfg.tuple_mode = multiset ? TupleMode::kMultiset : TupleMode::kOrdered;
      cfg.two_sided_n = n;
      cfg.two_sided_ell = ell;
      cfg.params = lemma_pl.get();
      cfg.d1 = d1;
      cfg.d2 = d2;
      cfg.budget = g.budget;
      if (kappa > n_vertices) throw InvalidArgument("planted clique larger than the graph");
      const PipelineResult res = run_pipeline(cfg);

      const fs::path dir(output);
      fs::create_directories(dir);
      auto put = [&](const char* stem, const char* ext, const std::string& body, const ReductionCertificate& cert) {
        const std::string path = (dir / (std::string(stem) + ext)).string();
        write_file(path, body);
        write_file((dir / (std::string(stem) + ".cert")).string(), serialize_certificate(cert));
        warn_violations(cert, err);
        r.add("file", path);
      };
      put("graph", ".graph", serialize_graph(res.graph.graph), res.biclique_certificate);
      ReductionCertificate bcert;
      bcert.reduction = "clique-to-biclique";
      bcert.add_param("N", std::to_string(n_vertices));
      put("biclique", ".bigraph", serialize_bigraph(res.biclique_instance), bcert);
      if (res.product) put("product", ".bigraph", serialize_bigraph(res.product->graph), res.product->certificate);
      put("class", ".ccls", serialize_concept_class(res.concept_class), res.flip_certificate);

      r.add("planted", index_list(res.graph.planted));
      r.add("points", res.concept_class.n_points());
      r.add("concepts", res.concept_class.n_concepts());
      r.add("verdict", std::string(to_string(res.verdict)));
      return kOk;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  if (!action) {
    err << "error: no command\n";
    return kParseError;
  }

  try {
    Report report;
    const int code = action(report);
    out << (g.json ? report.json() : report.text());
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace vcldim::cli
