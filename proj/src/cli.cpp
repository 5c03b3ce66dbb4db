#include "spliceidx/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "spliceidx/formulas.hpp"
#include "spliceidx/io.hpp"
#include "spliceidx/report.hpp"
#include "spliceidx/verify.hpp"

namespace spliceidx::cli {

namespace {

struct InputOptions {
  std::string format = "edgelist";
  bool one_based = false;

  Graph read(const std::string& path) const {
    return read_graph_file(path,
                           format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list,
                           one_based);
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_flag("--one-based", in.one_based, "Edge-list ids start at 1");
}

const std::map<std::string, IndexKind> kIndexFlags = {
    {"sz", IndexKind::szeged},
    {"sze", IndexKind::edge_szeged},
    {"pi", IndexKind::pi_edge},
    {"piv", IndexKind::pi_vertex},
    {"ecc", IndexKind::eccentric_connectivity}};

void print_values(std::ostream& os, const IndexValues& v,
                  std::span<const IndexKind> only) {
  for (IndexKind k : kAllIndices) {
    if (!only.empty() && std::find(only.begin(), only.end(), k) == only.end()) continue;
    os << index_name(k) << ": " << get(v, k) << "\n";
  }
}

std::array<IndexComparison, 5> compare(const IndexValues& direct,
                                       const IndexValues& formula, Variant variant) {
  std::array<IndexComparison, 5> out;
  for (IndexKind k : kAllIndices) {
    out[static_cast<std::size_t>(k)] = {get(direct, k), get(formula, k), variant};
  }
  return out;
}

double median_ms(std::vector<std::chrono::nanoseconds> times) {
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  const auto ns = times.size() % 2 ? times[mid].count()
                                   : (times[mid - 1].count() + times[mid].count()) / 2;
  return static_cast<double>(ns) / 1e6;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Distance-based topological indices of graphs and splice graphs",
               "splice-indices"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Indices of one graph");
  std::string compute_file;
  std::string index_flag = "all";
  bool compute_json = false;
  InputOptions compute_in;
  compute->add_option("file", compute_file, "Graph file")->required();
  compute->add_option("--index", index_flag, "Index to report")
      ->check(CLI::IsMember({"all", "sz", "sze", "pi", "piv", "ecc"}));
  compute->add_flag("--json", compute_json, "JSON output");
  add_input_options(compute, compute_in);

  // splice
  auto* splice_cmd = app.add_subcommand("splice", "Splice two graphs at a vertex");
  std::string file1, file2, out_file;
  Vertex u1 = 0, u2 = 0;
  std::string method_flag = "formula";
  bool compare_flag = false, splice_json = false;
  InputOptions splice_in;
  splice_cmd->add_option("file1", file1, "First graph")->required();
  splice_cmd->add_option("file2", file2, "Second graph")->required();
  splice_cmd->add_option("--u1", u1, "Glue vertex in the first graph")->required();
  splice_cmd->add_option("--u2", u2, "Glue vertex in the second graph")->required();
  splice_cmd->add_option("--out", out_file, "Write the spliced graph as an edge list");
  splice_cmd->add_option("--method", method_flag, "Computation path")
      ->check(CLI::IsMember({"direct", "formula", "formula-printed"}));
  splice_cmd->add_flag("--compare", compare_flag, "Show direct and formula side by side");
  splice_cmd->add_flag("--json", splice_json, "JSON output");
  add_input_options(splice_cmd, splice_in);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the closed forms against direct computation");
  CampaignConfig cfg;
  cfg.trials = 200;
  cfg.exhaustive_limit = 4;
  cfg.seed = 1;
  std::string variant_flag = "corrected";
  bool verify_json = false, timing = false;
  verify_cmd->add_option("--trials", cfg.trials, "Random trials");
  verify_cmd->add_option("--min-n", cfg.min_vertices, "Smallest random component");
  verify_cmd->add_option("--max-n", cfg.max_vertices, "Largest random component");
  verify_cmd->add_option("--min-density", cfg.min_density, "Lowest extra-edge density");
  verify_cmd->add_option("--max-density", cfg.max_density, "Highest extra-edge density");
  verify_cmd->add_option("--exhaustive-limit", cfg.exhaustive_limit,
                         "Largest component order in the exhaustive phase (0 skips it)");
  verify_cmd->add_option("--seed", cfg.seed, "RNG seed");
  verify_cmd->add_option("--variant", variant_flag, "Formula variants")
      ->check(CLI::IsMember({"printed", "corrected", "both"}));
  verify_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = default)");
  verify_cmd->add_flag("--json", verify_json, "JSON output");
  verify_cmd->add_flag("--timing", timing, "Include elapsed time");

  // bench
  auto* bench = app.add_subcommand("bench", "Time direct recomputation against the closed forms");
  std::string bench1, bench2;
  Vertex bu1 = 0, bu2 = 0;
  int repeat = 5;
  InputOptions bench_in;
  bench->add_option("file1", bench1, "First graph")->required();
  bench->add_option("file2", bench2, "Second graph")->required();
  bench->add_option("--u1", bu1, "Glue vertex in the first graph")->required();
  bench->add_option("--u2", bu2, "Glue vertex in the second graph")->required();
  bench->add_option("--repeat", repeat, "Repetitions");
  add_input_options(bench, bench_in);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }

  std::ostringstream buf;
  try {
    if (*compute) {
      const Graph g = compute_in.read(compute_file);
      std::vector<IndexKind> only;
      if (index_flag != "all") only.push_back(kIndexFlags.at(index_flag));
      const IndexReport r = direct_report(g);
      if (compute_json) {
        JsonReportOptions opt;
        opt.only = only;
        buf << index_report_json(g, r, opt);
      } else {
        print_values(buf, r.values, only);
      }
    } else if (*splice_cmd) {
      SpliceSpec spec{splice_in.read(file1), splice_in.read(file2), u1, u2};
      const SplicedGraph s = splice(spec);
      if (!out_file.empty()) write_edge_list_file(out_file, s.graph);

      const Method method = method_flag == "direct"            ? Method::direct
                            : method_flag == "formula-printed" ? Method::formula_printed
                                                               : Method::formula_corrected;
      const IndexReport r = splice_index_report(spec, method);
      std::optional<std::array<IndexComparison, 5>> cmp;
      if (compare_flag) {
        const IndexReport direct =
            method == Method::direct ? r : splice_index_report(spec, Method::direct);
        const Method fm = method == Method::direct ? Method::formula_corrected : method;
        const IndexReport formula =
            method == Method::direct ? splice_index_report(spec, fm) : r;
        cmp = compare(direct.values, formula.values,
                      fm == Method::formula_printed ? Variant::printed : Variant::corrected);
      }
      if (splice_json) {
        JsonReportOptions opt;
        opt.include_method = true;
        opt.include_counters = true;
        opt.comparison = cmp;
        buf << index_report_json(s.graph, r, opt);
      } else {
        buf << "method: " << method_name(r.method);
        if (r.method == Method::formula_printed) {
          buf << " (as published: glue vertex counted in both components)";
        }
        buf << "\nn: " << s.graph.vertex_count() << "\nm: " << s.graph.edge_count()
            << "\n";
        print_values(buf, r.values, {});
        buf << "bfs_calls: " << r.counters.bfs_calls << "\n";
        if (cmp) {
          const Variant v = (*cmp)[0].variant;
          buf << "\n" << std::left << std::setw(24) << "index" << std::right
              << std::setw(14) << "direct" << std::setw(20)
              << (v == Variant::printed ? "formula-printed" : "formula-corrected")
              << std::setw(8) << "match" << "\n";
          for (IndexKind k : kAllIndices) {
            const auto& c = (*cmp)[static_cast<std::size_t>(k)];
            buf << std::left << std::setw(24) << index_name(k) << std::right
                << std::setw(14) << c.direct << std::setw(20) << c.formula
                << std::setw(8) << (c.match() ? "yes" : "NO") << "\n";
          }
        }
      }
    } else if (*verify_cmd) {
      if (variant_flag == "both") {
        cfg.variants = {Variant::printed, Variant::corrected};
      } else {
        cfg.variants = {variant_flag == "printed" ? Variant::printed : Variant::corrected};
      }
      try {
        validate(cfg);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
      }
      const CampaignReport report = run_campaign(cfg);
      const std::string text = verify_json ? campaign_report_json(report, timing)
                                           : campaign_report_text(report);
      const bool corrected = std::find(cfg.variants.begin(), cfg.variants.end(),
                                       Variant::corrected) != cfg.variants.end();
      if (corrected && report.mismatches(Variant::corrected) > 0) {
        err << text << "error: corrected closed forms disagree with direct computation\n";
        return kParseError;
      }
      buf << text;
      if (!verify_json && timing) {
        buf << "elapsed_ms: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count()
            << "\n";
      }
    } else if (*bench) {
      if (repeat < 1) {
        err << "error: --repeat must be at least 1\n";
        return kValidationError;
      }
      SpliceSpec spec{bench_in.read(bench1), bench_in.read(bench2), bu1, bu2};
      (void)splice(spec);  // validates glue ids up front
      std::vector<std::chrono::nanoseconds> direct_t, formula_t;
      WorkCounters direct_c, formula_c;
      for (int k = 0; k < repeat; ++k) {
        const IndexReport d = splice_index_report(spec, Method::direct);
        const IndexReport f = splice_index_report(spec, Method::formula_corrected);
        if (d.values != f.values) {
          err << "error: direct and formula-corrected values differ\n";
          return kInternalError;
        }
        direct_t.push_back(d.wall_time);
        formula_t.push_back(f.wall_time);
        direct_c = d.counters;
        formula_c = f.counters;
      }
      const std::size_t n1 = spec.g1.vertex_count(), n2 = spec.g2.vertex_count();
      if (formula_c.bfs_calls != n1 + n2 || direct_c.bfs_calls != n1 + n2 - 1) {
        err << "error: BFS counters violate the expected relation (formula "
            << formula_c.bfs_calls << ", direct " << direct_c.bfs_calls << ")\n";
        return kInternalError;
      }
      const double dm = median_ms(direct_t), fm = median_ms(formula_t);
      buf << std::left << std::setw(20) << "path" << std::right << std::setw(12)
          << "bfs_calls" << std::setw(16) << "median_ms" << "\n";
      buf << std::left << std::setw(20) << "direct" << std::right << std::setw(12)
          << direct_c.bfs_calls << std::setw(16) << std::fixed << std::setprecision(3)
          << dm << "\n";
      buf << std::left << std::setw(20) << "formula-corrected" << std::right
          << std::setw(12) << formula_c.bfs_calls << std::setw(16) << fm << "\n";
      buf << "repeat: " << repeat << "\nformula_faster: " << (fm < dm ? "yes" : "no")
          << "\n";
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << "\n";
    return kValidationError;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  out << buf.str();
  return kOk;
}

}  // namespace spliceidx::cli
