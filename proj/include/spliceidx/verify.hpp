#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spliceidx/formulas.hpp"
#include "spliceidx/graph.hpp"
#include "spliceidx/indices.hpp"
#include "spliceidx/splice.hpp"

namespace spliceidx {

/// SplitMix64 (Steele, Lea & Flood). Small, fast, and splittable by seeding
/// a fresh stream per trial, which keeps campaigns independent of thread
/// scheduling. Bounded draws use rejection sampling so the sequence does
/// not depend on the standard library's distributions.
class Rng {
 public:
  static constexpr std::string_view algorithm = "splitmix64";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream `index` derived from `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t state_;
};

/// Uniform random spanning tree (Aldous-Broder walk on K_n) plus each
/// remaining pair as an edge with probability `density`.
Graph random_connected_graph(std::size_t n, double density, Rng& rng);

/// Uniform random labeled tree on n vertices.
inline Graph random_tree(std::size_t n, Rng& rng) {
  return random_connected_graph(n, 0.0, rng);
}

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// All connected graphs with 1..max_n vertices, one per isomorphism class,
/// ordered by vertex count. Throws std::invalid_argument if max_n > 7.
std::vector<Graph> enumerate_small_graphs(std::size_t max_n);

/// Brute-force isomorphism test for small graphs.
bool isomorphic(const Graph& a, const Graph& b);

struct VariantValues {
  Variant variant;
  IndexValues values;
};

struct ComparisonRecord {
  IndexValues direct;
  std::vector<VariantValues> formula;

  bool matches(Variant v, IndexKind k) const;
  bool all_match(Variant v) const;
};

ComparisonRecord verify_one(const SpliceSpec& spec,
                            std::span<const Variant> variants);

struct CampaignConfig {
  std::uint64_t trials = 0;
  std::size_t min_vertices = 10;
  std::size_t max_vertices = 40;
  double min_density = 0.1;
  double max_density = 0.5;
  std::uint64_t seed = 0;
  std::vector<Variant> variants{Variant::corrected};
  /// Largest component order in the exhaustive phase; 0 skips it.
  std::size_t exhaustive_limit = 0;
  /// 0 means SPLICE_INDICES_THREADS or the hardware default.
  unsigned threads = 0;
};

/// Throws std::invalid_argument on an unusable config.
void validate(const CampaignConfig& config);

struct Witness {
  std::uint64_t case_index = 0;
  SpliceSpec spec;
  IndexValue direct = 0;
  IndexValue formula = 0;
};

struct CampaignCell {
  std::uint64_t matches = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t max_abs_discrepancy = 0;
  /// Mismatches where the formula came out below the direct value.
  std::uint64_t underestimates = 0;
  std::optional<Witness> first_witness;
};

struct CampaignReport {
  CampaignConfig config;
  std::uint64_t exhaustive_cases = 0;
  std::uint64_t random_cases = 0;
  /// cells[variant position in config.variants][IndexKind]
  std::vector<std::array<CampaignCell, 5>> cells;
  std::chrono::nanoseconds elapsed{0};

  std::uint64_t total_cases() const { return exhaustive_cases + random_cases; }
  const CampaignCell& cell(Variant v, IndexKind k) const;
  std::uint64_t mismatches(Variant v) const;
};

/// Exhaustive phase over all unordered pairs from enumerate_small_graphs
/// and every glue choice, then `trials` random splices. The report depends
/// only on the config, never on thread count.
CampaignReport run_campaign(const CampaignConfig& config);

/// Worker count: SPLICE_INDICES_THREADS if set and positive, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

}  // namespace spliceidx
