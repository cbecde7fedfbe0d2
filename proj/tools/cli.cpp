#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "mdred/certify.hpp"
#include "mdred/error.hpp"
#include "mdred/graph_io.hpp"
#include "mdred/md.hpp"
#include "mdred/mrs.hpp"
#include "mdred/resolving.hpp"
#include "mdred/tdm.hpp"
#include "mdred/width.hpp"

namespace mdred::cli {

namespace {

// Input problems (missing files, bad flags) map to the usage exit code.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::uint64_t seed = 0;
  int max_n = kEquivalenceMaxN;
  int max_m = kEquivalenceMaxM;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

ThreeDMInstance load_3dm(const std::string& path, const Config& cfg) {
  ThreeDMInstance inst = parse_3dm(read_file(path));
  if (inst.n > cfg.max_n || inst.m() > cfg.max_m) {
    throw CapacityError("instance n=" + std::to_string(inst.n) + " m=" + std::to_string(inst.m()) +
                        " exceeds the guard n <= " + std::to_string(cfg.max_n) +
                        ", m <= " + std::to_string(cfg.max_m));
  }
  return inst;
}

LabeledGraph load_graph(const std::string& graph_path, const std::string& labels_path) {
  std::ifstream g(graph_path);
  if (!g) throw InputError("cannot open " + graph_path);
  if (labels_path.empty()) return read_graph(g);
  std::ifstream l(labels_path);
  if (!l) throw InputError("cannot open " + labels_path);
  return read_graph(g, &l);
}

void header(std::ostream& out, const std::string& command, const Config& cfg) {
  out << "# mdred " << command << " seed=" << cfg.seed << '\n';
}

const char* verdict(bool ok) { return ok ? "ok" : "FAIL"; }

// One "fact" line per report; the first violation goes to err.
bool emit(std::ostream& out, std::ostream& err, const Report& r) {
  out << "fact " << r.name << ' ' << verdict(r.ok()) << " checks=" << r.checks
      << " violations=" << r.violations.size();
  if (!r.ok()) {
    out << ' ' << r.violations.front();
    err << r.name << ": " << r.violations.front() << '\n';
  }
  out << '\n';
  return r.ok();
}

bool emit(std::ostream& out, std::ostream& err, const Certificate& c) {
  const char* kind = c.kind == CertificateKind::Yes ? "yes" : "no";
  out << "certificate " << kind << ' ' << verdict(c.valid) << '\n';
  for (const Fact& f : c.facts) {
    out << "fact " << f.name << ' ' << verdict(f.ok) << ' ' << f.detail << '\n';
    if (!f.ok) err << "certificate " << kind << ": " << f.name << ": " << f.detail << '\n';
  }
  for (const std::string& line : c.reasoning) out << "reason " << line << '\n';
  return c.valid;
}

void emit_stats(std::ostream& out, const MdInstance& md) {
  const MdStats s = md_stats(md);
  out << "n=" << md.n() << " m=" << md.m() << " k=" << s.k << " vertices=" << s.vertices
      << " edges=" << s.edges << " gadgets=" << s.gadget_count << " paths=" << s.path_count << '\n';
}

void write_graph_files(const std::string& prefix, const LabeledGraph& g) {
  auto gf = open_out(prefix + ".graph");
  write_graph(gf, g);
  auto lf = open_out(prefix + ".labels");
  write_labels(lf, g);
}

std::string join_ids(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

bool run_width(std::ostream& out, std::ostream& err, const LabeledGraph& g, const NodeSearchStrategy& strat,
               const std::string& bags_path) {
  const StrategyCheck c = verify_strategy(g, strat);
  if (c.violation) {
    out << "strategy FAIL " << c.violation->message << '\n';
    err << c.violation->message << '\n';
    return false;
  }
  out << "moves=" << strat.moves.size() << " maxSearchers=" << c.max_searchers << " monotone=" << c.monotone
      << " allCleared=" << c.all_cleared << " smooth=" << c.smooth << '\n';
  if (!c.ok() || !c.smooth) {
    err << "strategy is not a smooth monotone clearing strategy\n";
    return false;
  }
  const std::vector<Bag> bags = strategy_to_decomposition(g, strat);
  const DecompositionCheck d = validate_path_decomposition(g, bags);
  if (!d.ok()) {
    out << "decomposition FAIL " << d.violation->message << '\n';
    err << d.violation->message << '\n';
    return false;
  }
  out << "decomposition ok bags=" << bags.size() << " width=" << *d.width << '\n';
  if (!bags_path.empty()) {
    auto f = open_out(bags_path);
    for (const Bag& b : bags) {
      f << 'b';
      for (VertexId v : b) f << ' ' << v;
      f << '\n';
    }
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric dimension reduction toolkit", "mdred"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed recorded in reports and used by generators");
  app.add_option("--max-n", cfg.max_n, "Refuse instances with larger n");
  app.add_option("--max-m", cfg.max_m, "Refuse instances with more tuples");

  int exit_code = kExitOk;

  // gen3dm
  auto* gen = app.add_subcommand("gen3dm", "Generate a random 3DM instance");
  int gen_n = 1;
  int gen_m = 1;
  bool planted = false;
  std::string gen_out;
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--m", gen_m)->required();
  gen->add_option("--seed", cfg.seed);
  gen->add_flag("--planted", planted, "Hide a perfect matching among the tuples");
  gen->add_option("--out", gen_out, "Write here instead of stdout");
  gen->callback([&] {
    const ThreeDMInstance inst = gen_3dm(gen_n, gen_m, cfg.seed, planted);
    std::ostringstream text;
    text << "# gen3dm n=" << gen_n << " m=" << gen_m << " seed=" << cfg.seed << (planted ? " planted" : "")
         << '\n'
         << format_3dm(inst);
    if (gen_out.empty()) {
      out << text.str();
    } else {
      open_out(gen_out) << text.str();
    }
  });

  // solve3dm
  auto* solve3 = app.add_subcommand("solve3dm", "Decide a 3DM instance");
  std::string in_path;
  solve3->add_option("--in", in_path)->required();
  solve3->callback([&] {
    const ThreeDMInstance inst = parse_3dm(read_file(in_path));
    header(out, "solve3dm", cfg);
    if (auto cover = solve_3dm(inst)) {
      out << "cover " << join_ids(*cover) << '\n';
    } else {
      out << "no cover\n";
    }
  });

  // reduce mrs|md
  auto* reduce = app.add_subcommand("reduce", "Build G or G' and write .graph/.labels/.meta");
  reduce->require_subcommand(1);
  std::string out_prefix;
  for (const char* which : {"mrs", "md"}) {
    auto* sub = reduce->add_subcommand(which, std::string(which) == "mrs" ? "Multicolored resolving set graph G" : "Metric dimension graph G' with budget k");
    sub->add_option("--in", in_path)->required();
    sub->add_option("--out", out_prefix, "Output prefix")->required();
    const std::string name = which;
    sub->callback([&, name] {
      const ThreeDMInstance inst = load_3dm(in_path, cfg);
      header(out, "reduce " + name, cfg);
      if (name == "mrs") {
        const MrsInstance mrs = build_mrs(inst);
        write_graph_files(out_prefix, mrs.graph);
        auto meta = open_out(out_prefix + ".meta");
        write_mrs_meta(meta, mrs.layout);
        out << "n=" << inst.n << " m=" << inst.m() << " vertices=" << mrs.graph.vertex_count()
            << " edges=" << mrs.graph.edge_count() << '\n';
      } else {
        const MdInstance md = build_md(inst);
        write_graph_files(out_prefix, md.graph);
        auto meta = open_out(out_prefix + ".meta");
        write_md_meta(meta, md);
        emit_stats(out, md);
      }
    });
  }

  // solve mrs|tiny
  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->require_subcommand(1);
  auto* solve_mrs_cmd = solve->add_subcommand("mrs", "Multicolored resolving set on G");
  solve_mrs_cmd->add_option("--in", in_path)->required();
  solve_mrs_cmd->callback([&] {
    const ThreeDMInstance inst = load_3dm(in_path, cfg);
    const MrsInstance mrs = build_mrs(inst);
    header(out, "solve mrs", cfg);
    if (auto sel = solve_mrs(mrs)) {
      out << "selection " << join_ids(*sel) << '\n';
    } else {
      out << "no selection\n";
    }
  });
  auto* tiny = solve->add_subcommand("tiny", "Metric dimension of a small graph by enumeration");
  std::string graph_path;
  std::string labels_path;
  int max_k = 3;
  tiny->add_option("--graph", graph_path)->required();
  tiny->add_option("--labels", labels_path);
  tiny->add_option("--max-k", max_k)->required();
  tiny->callback([&] {
    const LabeledGraph g = load_graph(graph_path, labels_path);
    header(out, "solve tiny", cfg);
    if (auto set = metric_dimension_tiny(g, max_k)) {
      out << "dimension " << set->size() << '\n' << "set";
      for (VertexId v : *set) out << ' ' << g.label(v).to_string();
      out << '\n';
    } else {
      out << "dimension > " << max_k << '\n';
    }
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Verify reduction properties on one instance");
  certify->require_subcommand(1);
  std::string facts_path;
  const std::pair<const char*, const char*> certify_cmds[] = {
      {"lemma1", "Selector resolution in G matches tuple membership"},
      {"forcedset", "p/q classification of every vertex of G'"},
      {"forcedvertex", "Twins of each gadget are equidistant to every pair"},
      {"yes", "Build and check S' from a cover"},
      {"no", "Check the NO certificate facts"},
      {"all", "Every check above plus structure and distance audits"},
  };
  for (auto [which, what] : certify_cmds) {
    auto* sub = certify->add_subcommand(which, what);
    sub->add_option("--in", in_path)->required();
    sub->add_option("--facts", facts_path, "Write the fact lines to this file");
    const std::string name = which;
    sub->callback([&, name] {
      const ThreeDMInstance inst = load_3dm(in_path, cfg);
      std::ostringstream rep;
      header(rep, "certify " + name, cfg);
      bool ok = true;
      if (name == "lemma1") {
        const MrsInstance mrs = build_mrs(inst);
        ok = emit(rep, err, verify_distance_identities(mrs.graph, mrs.layout, inst)) && ok;
        ok = emit(rep, err, verify_lemma_resolve(mrs, inst)) && ok;
      } else {
        const MdInstance md = build_md(inst);
        rep << "# ";
        emit_stats(rep, md);
        if (name == "forcedset") {
          ok = emit(rep, err, verify_forced_set_lemma(md));
        } else if (name == "forcedvertex") {
          ok = emit(rep, err, verify_forced_vertex_lemma(md));
        } else if (name == "yes") {
          const auto cover = solve_3dm(inst);
          if (!cover) {
            rep << "certificate yes FAIL no cover exists\n";
            err << "certify yes: the instance has no 3DM cover\n";
            ok = false;
          } else {
            ok = emit(rep, err, certify_yes(md, inst, *cover));
          }
        } else if (name == "no") {
          ok = emit(rep, err, certify_no(md, inst));
        } else {
          const MrsInstance& mrs = md.base;
          ok = emit(rep, err, verify_distance_identities(mrs.graph, mrs.layout, inst)) && ok;
          ok = emit(rep, err, verify_lemma_resolve(mrs, inst)) && ok;
          const FvsResult fvs = verify_fvs(mrs);
          rep << "fact fvs " << verdict(fvs.acyclic) << " components=" << fvs.components << '\n';
          if (!fvs.acyclic) err << "fvs: G minus the hubs has a cycle\n";
          ok = fvs.acyclic && ok;
          ok = emit(rep, err, verify_twin_exclusivity(md)) && ok;
          ok = emit(rep, err, verify_forced_set_lemma(md)) && ok;
          ok = emit(rep, err, verify_forced_vertex_lemma(md)) && ok;
          ok = emit(rep, err, verify_pair_resolvers(md, inst)) && ok;
          ok = emit(rep, err, verify_distance_preservation(md)) && ok;
          const EquivalenceVerdict eq = equivalence_check(inst, md);
          rep << "equivalence " << (eq.yes_instance ? "yes" : "no") << ' ' << verdict(eq.ok)
              << (eq.exploratory ? " exploratory" : "") << '\n';
          const bool eq_ok = emit(rep, err, eq.certificate);
          if (!eq.exploratory) ok = eq_ok && ok;
        }
      }
      rep << "result " << verdict(ok) << '\n';
      out << rep.str();
      if (!facts_path.empty()) {
        auto f = open_out(facts_path);
        std::istringstream lines(rep.str());
        for (std::string line; std::getline(lines, line);) {
          if (line.rfind("fact ", 0) == 0) f << line << '\n';
        }
      }
      if (!ok) exit_code = kExitViolation;
    });
  }

  // width synth|verify
  auto* width = app.add_subcommand("width", "Node-search strategies and path decompositions");
  width->require_subcommand(1);
  std::string strategy_path;
  std::string bags_path;
  auto* synth = width->add_subcommand("synth", "Synthesize and verify a strategy for G'");
  synth->add_option("--in", in_path)->required();
  synth->add_option("--out", strategy_path, "Strategy file to write");
  synth->add_option("--bags", bags_path, "Path decomposition file to write");
  synth->callback([&] {
    const MdInstance md = build_md(load_3dm(in_path, cfg));
    const NodeSearchStrategy strat = synth_strategy(md);
    if (!strategy_path.empty()) {
      auto f = open_out(strategy_path);
      write_strategy(f, strat);
    }
    header(out, "width synth", cfg);
    if (!run_width(out, err, md.graph, strat, bags_path)) exit_code = kExitViolation;
  });
  auto* verify = width->add_subcommand("verify", "Check a strategy file against a graph");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--labels", labels_path);
  verify->add_option("--strategy", strategy_path)->required();
  verify->add_option("--bags", bags_path, "Path decomposition file to write");
  verify->callback([&] {
    const LabeledGraph g = load_graph(graph_path, labels_path);
    std::istringstream s(read_file(strategy_path));
    const NodeSearchStrategy strat = read_strategy(s);
    header(out, "width verify", cfg);
    if (!run_width(out, err, g, strat, bags_path)) exit_code = kExitViolation;
  });

  // export: every artifact of G' under one prefix
  auto* exp = app.add_subcommand("export", "Write G', its sidecars, strategy, bags and S' for one instance");
  exp->add_option("--in", in_path)->required();
  exp->add_option("--out", out_prefix, "Output prefix")->required();
  exp->callback([&] {
    const ThreeDMInstance inst = load_3dm(in_path, cfg);
    const MdInstance md = build_md(inst);
    header(out, "export", cfg);
    write_graph_files(out_prefix, md.graph);
    {
      auto meta = open_out(out_prefix + ".meta");
      write_md_meta(meta, md);
    }
    const NodeSearchStrategy strat = synth_strategy(md);
    {
      auto f = open_out(out_prefix + ".strategy");
      write_strategy(f, strat);
    }
    if (!run_width(out, err, md.graph, strat, out_prefix + ".bags")) exit_code = kExitViolation;
    if (auto cover = solve_3dm(inst)) {
      const Certificate cert = certify_yes(md, inst, *cover);
      auto f = open_out(out_prefix + ".resolving");
      for (VertexId v : cert.resolving_set) f << v << '\t' << md.graph.label(v).to_string() << '\n';
      out << "resolving set " << verdict(cert.valid) << " size=" << cert.resolving_set.size() << '\n';
    } else {
      out << "resolving set none (no cover)\n";
    }
    emit_stats(out, md);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const ConstructionError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace mdred::cli
