#pragma once

#include "spliceidx/indices.hpp"
#include "spliceidx/splice.hpp"

namespace spliceidx {

/// Component-level data for the splice closed forms. Both halves come from
/// splice_params, so the component index values are the indices module's.
struct FormulaInputs {
  ComponentParams first;
  ComponentParams second;
};

/// Runs exactly |V1| + |V2| BFS, all inside the components.
FormulaInputs make_formula_inputs(const SpliceSpec& spec,
                                  WorkCounters* counters = nullptr);

// Closed forms for the five indices of the splice. The printed variant
// evaluates the published expressions verbatim, including the glue vertex
// counted on both sides; corrected counts it once. For Sz_e and PI the two
// variants coincide.

IndexValue szeged_splice(const FormulaInputs& in, Variant variant);
IndexValue edge_szeged_splice(const FormulaInputs& in, Variant variant);
IndexValue pi_vertex_splice(const FormulaInputs& in, Variant variant);
IndexValue pi_edge_splice(const FormulaInputs& in, Variant variant);
IndexValue ecc_splice(const FormulaInputs& in, Variant variant);

IndexValues splice_indices(const FormulaInputs& in, Variant variant);

/// Direct builds the splice and recomputes from scratch. The formula
/// methods never build the composite graph.
IndexReport splice_index_report(const SpliceSpec& spec, Method method);

}  // namespace spliceidx
