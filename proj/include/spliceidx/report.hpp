#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "spliceidx/graph.hpp"
#include "spliceidx/indices.hpp"
#include "spliceidx/splice.hpp"
#include "spliceidx/verify.hpp"

namespace spliceidx {

inline constexpr std::string_view kVersion = "0.1.0";

/// One index compared across the direct and a formula path.
struct IndexComparison {
  IndexValue direct = 0;
  IndexValue formula = 0;
  Variant variant = Variant::corrected;
  bool match() const noexcept { return direct == formula; }
};

struct JsonReportOptions {
  /// Indices to include, in canonical order. Empty means all five.
  std::span<const IndexKind> only;
  bool include_method = false;
  bool include_counters = false;
  /// Per-index comparison, indexed by IndexKind.
  std::optional<std::array<IndexComparison, 5>> comparison;
};

/// Graph/index report with a fixed key order:
/// graph, indices, method, counters, comparison, version.
/// Index values are always JSON integers.
std::string index_report_json(const Graph& g, const IndexReport& report,
                              const JsonReportOptions& options = {});

/// Campaign report. Timing is left out unless include_timing is set so that
/// equal configs serialize to identical bytes.
std::string campaign_report_json(const CampaignReport& report,
                                 bool include_timing = false);

/// Human-readable campaign summary, one line per variant and index.
std::string campaign_report_text(const CampaignReport& report);

}  // namespace spliceidx
