#include "spliceidx/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace spliceidx {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Dense form used by the isomorphism search: adjacency matrix plus a
// per-vertex invariant (degree and distance histogram).
struct Dense {
  std::size_t n = 0;
  std::vector<char> adj;
  std::vector<std::uint64_t> inv;
  std::vector<std::uint64_t> signature;  // sorted inv, plus edge count
};

std::uint64_t vertex_invariant(std::size_t degree,
                               std::span<const Distance> row) {
  std::vector<std::uint64_t> hist(row.size() + 1, 0);
  for (Distance x : row) ++hist[x];
  std::uint64_t h = mix64(degree + 1);
  for (std::uint64_t c : hist) h = mix64(h ^ (c + kGamma));
  return h;
}

Dense to_dense(const Graph& g) {
  Dense d;
  d.n = g.vertex_count();
  d.adj.assign(d.n * d.n, 0);
  for (const Edge& e : g.edges()) {
    d.adj[e.u * d.n + e.v] = 1;
    d.adj[e.v * d.n + e.u] = 1;
  }
  const auto dist = all_pairs_distances(g);
  d.inv.resize(d.n);
  for (Vertex v = 0; v < d.n; ++v) d.inv[v] = vertex_invariant(g.degree(v), dist.row(v));
  d.signature = d.inv;
  std::sort(d.signature.begin(), d.signature.end());
  d.signature.push_back(g.edge_count());
  return d;
}

bool extend(const Dense& a, const Dense& b, std::vector<int>& image,
            std::vector<char>& used, std::size_t next) {
  if (next == a.n) return true;
  for (std::size_t cand = 0; cand < b.n; ++cand) {
    if (used[cand] || a.inv[next] != b.inv[cand]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      ok = a.adj[next * a.n + prev] ==
           b.adj[cand * b.n + static_cast<std::size_t>(image[prev])];
    }
    if (!ok) continue;
    image[next] = static_cast<int>(cand);
    used[cand] = 1;
    if (extend(a, b, image, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

bool dense_isomorphic(const Dense& a, const Dense& b) {
  if (a.n != b.n || a.signature != b.signature) return false;
  std::vector<int> image(a.n, -1);
  std::vector<char> used(b.n, 0);
  return extend(a, b, image, used, 0);
}

void enumerate_order(std::size_t n, std::vector<Graph>& out) {
  std::vector<Edge> pairs;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) pairs.push_back({u, v});
  }
  std::map<std::vector<std::uint64_t>, std::vector<Dense>> classes;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::array<std::uint32_t, kMaxEnumerationOrder> nb{};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) {
        nb[pairs[k].u] |= 1u << pairs[k].v;
        nb[pairs[k].v] |= 1u << pairs[k].u;
      }
    }
    // Every class has a labeling with non-increasing degrees.
    bool sorted = true;
    for (std::size_t v = 1; v < n && sorted; ++v) {
      sorted = std::popcount(nb[v - 1]) >= std::popcount(nb[v]);
    }
    if (!sorted) continue;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t grow = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (frontier >> v & 1) grow |= nb[v];
      }
      frontier = grow & ~seen;
      seen |= grow;
    }
    if (seen != (1u << n) - 1) continue;

    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    Graph g = build_graph(n, edges);
    Dense d = to_dense(g);
    auto& bucket = classes[d.signature];
    const bool known = std::any_of(bucket.begin(), bucket.end(),
                                   [&](const Dense& r) { return dense_isomorphic(d, r); });
    if (known) continue;
    bucket.push_back(std::move(d));
    out.push_back(std::move(g));
  }
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(seed) ^ mix64((index + 1) * kGamma));
}

std::uint64_t Rng::next() {
  state_ += kGamma;
  return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) std::swap(lo, hi);
  if (hi - lo == ~std::uint64_t{0}) return next();
  return lo + below(hi - lo + 1);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_connected_graph(std::size_t n, double density, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<char> in_tree(n, 0);
  Vertex at = static_cast<Vertex>(rng.below(n));
  in_tree[at] = 1;
  std::size_t visited = 1;
  while (visited < n) {
    // Uniform step to one of the other n - 1 vertices of K_n.
    auto to = static_cast<Vertex>(rng.below(n - 1));
    if (to >= at) ++to;
    if (!in_tree[to]) {
      in_tree[to] = 1;
      ++visited;
      edges.push_back({std::min(at, to), std::max(at, to)});
    }
    at = to;
  }
  if (density > 0.0) {
    std::sort(edges.begin(), edges.end());
    const std::vector<Edge> tree = edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (std::binary_search(tree.begin(), tree.end(), Edge{u, v})) continue;
        if (density >= 1.0 || rng.unit() < density) edges.push_back({u, v});
      }
    }
  }
  return build_graph(n, edges);
}

std::vector<Graph> enumerate_small_graphs(std::size_t max_n) {
  if (max_n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration limited to " +
                                std::to_string(kMaxEnumerationOrder) +
                                " vertices, got " + std::to_string(max_n));
  }
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) enumerate_order(n, out);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  return dense_isomorphic(to_dense(a), to_dense(b));
}

bool ComparisonRecord::matches(Variant v, IndexKind k) const {
  for (const auto& f : formula) {
    if (f.variant == v) return get(f.values, k) == get(direct, k);
  }
  throw std::invalid_argument("variant not evaluated");
}

bool ComparisonRecord::all_match(Variant v) const {
  return std::all_of(std::begin(kAllIndices), std::end(kAllIndices),
                     [&](IndexKind k) { return matches(v, k); });
}

ComparisonRecord verify_one(const SpliceSpec& spec,
                            std::span<const Variant> variants) {
  ComparisonRecord rec;
  rec.direct = compute_indices(splice(spec).graph);
  const auto inputs = make_formula_inputs(spec);
  for (Variant v : variants) rec.formula.push_back({v, splice_indices(inputs, v)});
  return rec;
}

void validate(const CampaignConfig& c) {
  if (c.exhaustive_limit > kMaxEnumerationOrder) {
    throw std::invalid_argument("exhaustive limit must be at most " +
                                std::to_string(kMaxEnumerationOrder));
  }
  if (c.variants.empty()) throw std::invalid_argument("no variants requested");
  if (c.trials > 0) {
    if (c.min_vertices < 1 || c.min_vertices > c.max_vertices) {
      throw std::invalid_argument("vertex bounds must satisfy 1 <= min <= max");
    }
    if (!(c.min_density >= 0.0 && c.min_density <= c.max_density &&
          c.max_density <= 1.0)) {
      throw std::invalid_argument(
          "density bounds must satisfy 0 <= min <= max <= 1");
    }
  }
}

const CampaignCell& CampaignReport::cell(Variant v, IndexKind k) const {
  for (std::size_t i = 0; i < config.variants.size(); ++i) {
    if (config.variants[i] == v) return cells[i][static_cast<std::size_t>(k)];
  }
  throw std::invalid_argument("variant not part of campaign");
}

std::uint64_t CampaignReport::mismatches(Variant v) const {
  std::uint64_t total = 0;
  for (IndexKind k : kAllIndices) total += cell(v, k).mismatches;
  return total;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("SPLICE_INDICES_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CampaignReport run_campaign(const CampaignConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  CampaignReport report;
  report.config = config;
  report.cells.resize(config.variants.size());

  const auto family = enumerate_small_graphs(config.exhaustive_limit);
  struct Glue {
    std::uint32_t i, j;
    Vertex u1, u2;
  };
  std::vector<Glue> glue_cases;
  for (std::uint32_t i = 0; i < family.size(); ++i) {
    for (std::uint32_t j = i; j < family.size(); ++j) {
      for (Vertex u1 = 0; u1 < family[i].vertex_count(); ++u1) {
        for (Vertex u2 = 0; u2 < family[j].vertex_count(); ++u2) {
          glue_cases.push_back({i, j, u1, u2});
        }
      }
    }
  }
  report.exhaustive_cases = glue_cases.size();
  report.random_cases = config.trials;

  auto make_case = [&](std::uint64_t index) -> SpliceSpec {
    if (index < glue_cases.size()) {
      const Glue& c = glue_cases[index];
      return {family[c.i], family[c.j], c.u1, c.u2};
    }
    Rng rng = Rng::stream(config.seed, index - glue_cases.size());
    const auto n1 = rng.between(config.min_vertices, config.max_vertices);
    const auto n2 = rng.between(config.min_vertices, config.max_vertices);
    const double span = config.max_density - config.min_density;
    const double p1 = config.min_density + span * rng.unit();
    const double p2 = config.min_density + span * rng.unit();
    SpliceSpec spec{random_connected_graph(n1, p1, rng),
                    random_connected_graph(n2, p2, rng), 0, 0};
    spec.u1 = static_cast<Vertex>(rng.below(n1));
    spec.u2 = static_cast<Vertex>(rng.below(n2));
    return spec;
  };

  const unsigned workers = config.threads ? config.threads : default_thread_count();
  const std::uint64_t total = report.total_cases();
  constexpr std::uint64_t kBlock = 4096;
  std::vector<ComparisonRecord> block;

  for (std::uint64_t base = 0; base < total; base += kBlock) {
    const std::uint64_t count = std::min(kBlock, total - base);
    block.assign(count, {});
    auto work = [&](unsigned w) {
      for (std::uint64_t k = w; k < count; k += workers) {
        block[k] = verify_one(make_case(base + k), config.variants);
      }
    };
    if (workers <= 1 || count < 64) {
      for (unsigned w = 0; w < workers; ++w) work(w);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    // Reduction in case order so first witnesses are well defined.
    for (std::uint64_t k = 0; k < count; ++k) {
      const ComparisonRecord& rec = block[k];
      for (std::size_t vi = 0; vi < config.variants.size(); ++vi) {
        for (IndexKind kind : kAllIndices) {
          CampaignCell& cell = report.cells[vi][static_cast<std::size_t>(kind)];
          const IndexValue direct = get(rec.direct, kind);
          const IndexValue formula = get(rec.formula[vi].values, kind);
          if (direct == formula) {
            ++cell.matches;
            continue;
          }
          ++cell.mismatches;
          const IndexValue diff = formula > direct ? formula - direct : direct - formula;
          cell.max_abs_discrepancy = std::max(cell.max_abs_discrepancy, diff);
          if (formula < direct) ++cell.underestimates;
          if (!cell.first_witness) {
            cell.first_witness = Witness{base + k, make_case(base + k), direct, formula};
          }
        }
      }
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace spliceidx
