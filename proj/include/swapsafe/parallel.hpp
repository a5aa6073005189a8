#pragma once

#include <optional>
#include <vector>

#include "swapsafe/swap.hpp"
#include "swapsafe/table.hpp"

namespace swapsafe {

// OpenMP kernels for the two data-parallel loops of the workload: reducing a
// sparse table onto a marginal, and running the partner search over many
// anchor records. The plain library functions (marginal, find_partner_plan)
// are the serial references; the kernels must produce identical results.

/// Parallel D-marginal: cells are partitioned across threads into local
/// accumulators which are then merged. Result equals marginal(table, d).
ContingencyTable marginal_parallel(const ContingencyTable& table, const VarSet& d);

/// Partner search over a list of anchors, one independent read-only search
/// per anchor. Result[r] corresponds to anchors[r].
std::vector<std::optional<SwapPlan>> sweep_partners(const ContingencyTable& table,
                                                    const std::vector<Cell>& anchors,
                                                    const GeneratingClass& cls,
                                                    const std::vector<SeparatorDecomposition>& seps);

/// Serial reference for sweep_partners.
std::vector<std::optional<SwapPlan>> sweep_partners_serial(
    const ContingencyTable& table, const std::vector<Cell>& anchors, const GeneratingClass& cls,
    const std::vector<SeparatorDecomposition>& seps);

}  // namespace swapsafe
