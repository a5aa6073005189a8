#pragma once

#include <optional>
#include <vector>

#include "swapsafe/model.hpp"
#include "swapsafe/table.hpp"
#include "swapsafe/varset.hpp"

namespace swapsafe::oracle {

// Exponential reference implementations used by the test suites and the
// --oracle cross-checks. They share data types with the library but none of
// its graph or swap logic: swappability is decided by recomputing marginals
// on a two-record table, separators by testing every vertex subset.

/// First nonempty proper E (in lexicographic subset order) that is effective
/// and, by marginal recomputation on the two-record table {i, j}, fixes
/// every protected marginal. Guarded to k <= 20.
std::optional<VarSet> brute_swappable(const Cell& i, const Cell& j, const GeneratingClass& cls);

/// Every vertex subset S such that some pair a,b is disconnected in G - S
/// and restoring any single vertex of S reconnects it. Guarded to 8
/// vertices. Sorted.
std::vector<VarSet> brute_minimal_separators(const Graph& g);

struct BrutePartner {
    Cell partner;
    VarSet swap_set;
};

/// Scans occupied cells j != i in lexicographic order and returns the first
/// with a brute-swappable E.
std::optional<BrutePartner> brute_partner(const ContingencyTable& table, const Cell& anchor,
                                          const GeneratingClass& cls);

}  // namespace swapsafe::oracle
