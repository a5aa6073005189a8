#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swapsafe/model.hpp"
#include "swapsafe/table.hpp"
#include "swapsafe/varset.hpp"

namespace swapsafe {

/// Variables on which two records disagree.
using DifferenceSet = VarSet;

DifferenceSet difference_set(const Cell& i, const Cell& j);

/// True iff swapping the E-coordinates of i and j yields a different record
/// pair: i_E != j_E and i_{E^C} != j_{E^C}. E must be a nonempty proper
/// subset of the variable set.
bool is_effective(const Cell& i, const Cell& j, const VarSet& e);

/// True iff an E-swap of i and j leaves the D-marginal unchanged: D ⊆ E, or
/// D ⊆ E^C, or the records agree on E∩D, or they agree on E^C∩D.
bool fixes_marginal(const Cell& i, const Cell& j, const VarSet& e, const VarSet& d);

/// An effective swap of two cells with respect to a variable subset E.
/// Construction validates effectiveness and precomputes the post-swap pair.
class SwapPlan {
public:
    SwapPlan(Cell i, Cell j, VarSet e);

    const Cell& cell_i() const { return i_; }
    const Cell& cell_j() const { return j_; }
    const VarSet& swap_set() const { return e_; }

    /// (i_E, j_{E^C})
    const Cell& result_i() const { return result_i_; }
    /// (j_E, i_{E^C})
    const Cell& result_j() const { return result_j_; }

    bool operator==(const SwapPlan& other) const {
        return i_ == other.i_ && j_ == other.j_ && e_ == other.e_;
    }

private:
    Cell i_, j_;
    VarSet e_;
    Cell result_i_, result_j_;
};

/// A separator certificate for swappability: the records agree on the
/// separator and disagree on both components; E = gamma_alpha.
struct SwapWitness {
    VarSet separator;
    VarSet gamma_alpha;
    VarSet gamma_beta;
    VarSet swap_set;  // = gamma_alpha
};

/// Decides swappability of two records under the class: some effective E
/// fixing every protected marginal exists iff the subgraph of the generated
/// graph induced on the difference set is disconnected. Returns the
/// component containing the smallest differing variable as the canonical E,
/// or nullopt.
std::optional<VarSet> is_swappable(const Cell& i, const Cell& j, const GeneratingClass& cls);

/// Separator-based certificate search: scans the decompositions in order for
/// one whose separator avoids the difference set while two components meet
/// it. Nonempty exactly when is_swappable is.
std::optional<SwapWitness> separator_witness(const Cell& i, const Cell& j,
                                             const GeneratingClass& cls,
                                             const std::vector<SeparatorDecomposition>& seps);

/// Applies the swap at cell-count level: n(i) and n(j) drop by one, the two
/// post-swap cells gain one. Throws if either source count is zero.
ContingencyTable apply_swap(const ContingencyTable& table, const SwapPlan& plan);

/// Partner search for the anchor cell: iterates separators and component
/// pairs in sorted order, picks the first nonempty diagonal subtable, the
/// lexicographically smallest marginal cell in it, then the smallest
/// occupied full cell matching that marginal cell. E = gamma_alpha.
std::optional<SwapPlan> find_partner_plan(const ContingencyTable& table, const Cell& anchor,
                                          const GeneratingClass& cls,
                                          const std::vector<SeparatorDecomposition>& seps);

struct PartnerResult {
    SwapPlan plan;
    ContingencyTable table;  // post-swap
};

std::optional<PartnerResult> find_partner(const ContingencyTable& table, const Cell& anchor,
                                          const GeneratingClass& cls,
                                          const std::vector<SeparatorDecomposition>& seps);

struct MarginalCheck {
    VarSet d;
    bool preserved = false;
};

struct PreservationReport {
    std::vector<MarginalCheck> checks;
    bool pass = false;
};

/// Recomputes every protected marginal on both tables and compares exactly.
PreservationReport verify_preservation(const ContingencyTable& before,
                                       const ContingencyTable& after,
                                       const GeneratingClass& cls);

}  // namespace swapsafe
