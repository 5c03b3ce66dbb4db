#include "spliceidx/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace spliceidx {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
}

ordered_json witness_json(const Witness& w) {
  return {{"case", w.case_index},
          {"g1", graph_json(w.spec.g1)},
          {"g2", graph_json(w.spec.g2)},
          {"u1", w.spec.u1},
          {"u2", w.spec.u2},
          {"direct", w.direct},
          {"formula", w.formula}};
}

}  // namespace

std::string index_report_json(const Graph& g, const IndexReport& report,
                              const JsonReportOptions& options) {
  ordered_json j;
  j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  ordered_json indices = ordered_json::object();
  for (IndexKind k : kAllIndices) {
    const bool wanted =
        options.only.empty() ||
        std::find(options.only.begin(), options.only.end(), k) != options.only.end();
    if (wanted) indices[std::string(index_name(k))] = get(report.values, k);
  }
  j["indices"] = std::move(indices);
  if (options.include_method) j["method"] = std::string(method_name(report.method));
  if (options.include_counters) {
    j["counters"] = {{"bfs_calls", report.counters.bfs_calls}};
  }
  if (options.comparison) {
    ordered_json cmp = ordered_json::object();
    for (IndexKind k : kAllIndices) {
      const auto& c = (*options.comparison)[static_cast<std::size_t>(k)];
      cmp[std::string(index_name(k))] = {{"direct", c.direct},
                                         {"formula", c.formula},
                                         {"variant", std::string(variant_name(c.variant))},
                                         {"match", c.match()}};
    }
    j["comparison"] = std::move(cmp);
  }
  j["version"] = std::string(kVersion);
  return j.dump(2) + "\n";
}

std::string campaign_report_json(const CampaignReport& report,
                                 bool include_timing) {
  const CampaignConfig& c = report.config;
  ordered_json j;
  j["rng"] = std::string(Rng::algorithm);
  j["seed"] = c.seed;
  j["exhaustive_limit"] = c.exhaustive_limit;
  j["trials"] = c.trials;
  j["min_vertices"] = c.min_vertices;
  j["max_vertices"] = c.max_vertices;
  j["min_density"] = c.min_density;
  j["max_density"] = c.max_density;
  j["exhaustive_cases"] = report.exhaustive_cases;
  j["random_cases"] = report.random_cases;
  j["total_cases"] = report.total_cases();
  ordered_json cells = ordered_json::object();
  for (std::size_t vi = 0; vi < c.variants.size(); ++vi) {
    ordered_json per = ordered_json::object();
    for (IndexKind k : kAllIndices) {
      const CampaignCell& cell = report.cells[vi][static_cast<std::size_t>(k)];
      ordered_json cj = {{"matches", cell.matches},
                         {"mismatches", cell.mismatches},
                         {"max_abs_discrepancy", cell.max_abs_discrepancy},
                         {"underestimates", cell.underestimates}};
      cj["first_witness"] =
          cell.first_witness ? witness_json(*cell.first_witness) : ordered_json(nullptr);
      per[std::string(index_name(k))] = std::move(cj);
    }
    cells[std::string(variant_name(c.variants[vi]))] = std::move(per);
  }
  j["cells"] = std::move(cells);
  if (include_timing) {
    j["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  }
  j["version"] = std::string(kVersion);
  return j.dump(2) + "\n";
}

std::string campaign_report_text(const CampaignReport& report) {
  std::ostringstream os;
  const CampaignConfig& c = report.config;
  os << "rng " << Rng::algorithm << ", seed " << c.seed << "\n"
     << "exhaustive phase: components up to " << c.exhaustive_limit
     << " vertices, " << report.exhaustive_cases << " splices\n"
     << "random phase: " << report.random_cases << " trials, " << c.min_vertices
     << "-" << c.max_vertices << " vertices, density " << c.min_density << "-"
     << c.max_density << "\n\n";
  os << std::left << std::setw(11) << "variant" << std::setw(24) << "index"
     << std::right << std::setw(10) << "matches" << std::setw(12) << "mismatches"
     << std::setw(10) << "max_diff" << "\n";
  for (std::size_t vi = 0; vi < c.variants.size(); ++vi) {
    for (IndexKind k : kAllIndices) {
      const CampaignCell& cell = report.cells[vi][static_cast<std::size_t>(k)];
      os << std::left << std::setw(11) << variant_name(c.variants[vi])
         << std::setw(24) << index_name(k) << std::right << std::setw(10)
         << cell.matches << std::setw(12) << cell.mismatches << std::setw(10)
         << cell.max_abs_discrepancy << "\n";
    }
  }
  return os.str();
}

}  // namespace spliceidx
