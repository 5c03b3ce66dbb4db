#include "spliceidx/formulas.hpp"

#include <algorithm>
#include <chrono>

namespace spliceidx {

namespace {

// Number of vertices of the other component that land strictly on one side
// of a transfer edge once spliced.
std::uint64_t other_side(const ComponentParams& other, Variant variant) {
  return variant == Variant::printed ? other.vertex_count
                                     : other.vertex_count - 1;
}

IndexValue ecc_part(const ComponentParams& self, const ComponentParams& other,
                    bool skip_root) {
  IndexValue total = 0;
  for (Vertex x = 0; x < self.vertex_count; ++x) {
    if (skip_root && x == self.root) continue;
    std::uint64_t deg = self.degree[x];
    if (x == self.root) deg += other.degree[other.root];
    const Distance eps = std::max(self.root_distance[x] + other.root_eccentricity,
                                  self.eccentricity[x]);
    total = checked_add(total, checked_mul(deg, eps, "Ecc formula"),
                        "Ecc formula");
  }
  return total;
}

}  // namespace

FormulaInputs make_formula_inputs(const SpliceSpec& spec,
                                  WorkCounters* counters) {
  return {splice_params(spec.g1, spec.u1, counters),
          splice_params(spec.g2, spec.u2, counters)};
}

IndexValue szeged_splice(const FormulaInputs& in, Variant variant) {
  const auto& a = in.first;
  const auto& b = in.second;
  IndexValue s = checked_add(a.indices.szeged, b.indices.szeged, "Sz formula");
  s = checked_add(s, checked_mul(other_side(b, variant), a.sum_far_vertices),
                  "Sz formula");
  s = checked_add(s, checked_mul(other_side(a, variant), b.sum_far_vertices),
                  "Sz formula");
  return s;
}

IndexValue edge_szeged_splice(const FormulaInputs& in, Variant) {
  const auto& a = in.first;
  const auto& b = in.second;
  IndexValue s =
      checked_add(a.indices.edge_szeged, b.indices.edge_szeged, "Sz_e formula");
  s = checked_add(s, checked_mul(b.edge_count, a.sum_far_edges), "Sz_e formula");
  s = checked_add(s, checked_mul(a.edge_count, b.sum_far_edges), "Sz_e formula");
  return s;
}

IndexValue pi_vertex_splice(const FormulaInputs& in, Variant variant) {
  const auto& a = in.first;
  const auto& b = in.second;
  IndexValue s =
      checked_add(a.indices.pi_vertex, b.indices.pi_vertex, "PI_v formula");
  if (variant == Variant::printed) {
    // (t2 + 1)|V1| + (t1 + 1)|V2|
    s = checked_add(s, checked_mul(b.transfer_edges + 1, a.vertex_count),
                    "PI_v formula");
    s = checked_add(s, checked_mul(a.transfer_edges + 1, b.vertex_count),
                    "PI_v formula");
  } else {
    s = checked_add(s, checked_mul(a.transfer_edges, b.vertex_count - 1),
                    "PI_v formula");
    s = checked_add(s, checked_mul(b.transfer_edges, a.vertex_count - 1),
                    "PI_v formula");
  }
  return s;
}

IndexValue pi_edge_splice(const FormulaInputs& in, Variant) {
  const auto& a = in.first;
  const auto& b = in.second;
  IndexValue s = checked_add(a.indices.pi_edge, b.indices.pi_edge, "PI formula");
  s = checked_add(s, checked_mul(b.transfer_edges, a.edge_count), "PI formula");
  s = checked_add(s, checked_mul(a.transfer_edges, b.edge_count), "PI formula");
  return s;
}

IndexValue ecc_splice(const FormulaInputs& in, Variant variant) {
  // The glue vertex belongs to both vertex sets; printed sums over both in
  // full, corrected drops u2 from the second sum.
  const bool skip = variant == Variant::corrected;
  return checked_add(ecc_part(in.first, in.second, false),
                     ecc_part(in.second, in.first, skip), "Ecc formula");
}

IndexValues splice_indices(const FormulaInputs& in, Variant variant) {
  return {szeged_splice(in, variant), edge_szeged_splice(in, variant),
          pi_edge_splice(in, variant), pi_vertex_splice(in, variant),
          ecc_splice(in, variant)};
}

IndexReport splice_index_report(const SpliceSpec& spec, Method method) {
  IndexReport r;
  r.method = method;
  const auto start = std::chrono::steady_clock::now();
  if (method == Method::direct) {
    const auto s = splice(spec);
    r.values = compute_indices(s.graph, &r.counters);
  } else {
    const auto in = make_formula_inputs(spec, &r.counters);
    r.values = splice_indices(in, method == Method::formula_printed
                                      ? Variant::printed
                                      : Variant::corrected);
  }
  r.wall_time = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace spliceidx
