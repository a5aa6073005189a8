#include "swapsafe/swap.hpp"

#include <stdexcept>

namespace swapsafe {

DifferenceSet difference_set(const Cell& i, const Cell& j) {
    if (i.size() != j.size())
        throw std::invalid_argument("difference set of cells with different arity");
    std::vector<int> out;
    for (int m = 0; m < i.size(); ++m)
        if (i[m] != j[m]) out.push_back(m);
    return DifferenceSet(std::move(out));
}

bool is_effective(const Cell& i, const Cell& j, const VarSet& e) {
    const int k = i.size();
    if (j.size() != k) throw std::invalid_argument("cells with different arity");
    if (e.empty() || e.size() >= k)
        throw std::invalid_argument("swap set must be a nonempty proper subset");
    if (!e.empty() && e.vars().back() >= k)
        throw std::invalid_argument("swap set mentions variable " +
                                    std::to_string(e.vars().back() + 1) +
                                    " beyond arity " + std::to_string(k));
    return !i.agrees_with(j, e) && !i.agrees_with(j, e.complement_in(k));
}

bool fixes_marginal(const Cell& i, const Cell& j, const VarSet& e, const VarSet& d) {
    const int k = i.size();
    const VarSet ec = e.complement_in(k);
    if (d.subset_of(e) || d.subset_of(ec)) return true;
    return i.agrees_with(j, e & d) || i.agrees_with(j, ec & d);
}

SwapPlan::SwapPlan(Cell i, Cell j, VarSet e)
    : i_(std::move(i)), j_(std::move(j)), e_(std::move(e)) {
    if (!is_effective(i_, j_, e_))
        throw std::invalid_argument("swap set " + to_string(e_) + " is not effective for " +
                                    to_string(i_) + " and " + to_string(j_));
    result_i_ = Cell::merge(i_, j_, e_);
    result_j_ = Cell::merge(j_, i_, e_);
}

std::optional<VarSet> is_swappable(const Cell& i, const Cell& j, const GeneratingClass& cls) {
    if (i.size() != cls.universe_size() || j.size() != cls.universe_size())
        throw std::invalid_argument("cell arity does not match the class universe");
    const DifferenceSet delta = difference_set(i, j);
    if (delta.size() < 2) return std::nullopt;  // need a difference on each side

    // An effective swap set fixing every protected marginal exists iff the
    // generated graph restricted to the difference set is disconnected; any
    // one component then serves as E.
    Graph sub = induced_subgraph(generated_graph(cls), delta);
    std::vector<VarSet> comps = connected_components(sub);
    if (comps.size() < 2) return std::nullopt;
    return comps.front();
}

std::optional<SwapWitness> separator_witness(const Cell& i, const Cell& j,
                                             const GeneratingClass& cls,
                                             const std::vector<SeparatorDecomposition>& seps) {
    if (i.size() != cls.universe_size() || j.size() != cls.universe_size())
        throw std::invalid_argument("cell arity does not match the class universe");
    const DifferenceSet delta = difference_set(i, j);
    for (const SeparatorDecomposition& dec : seps) {
        if (dec.separator.intersects(delta)) continue;  // need i_S = j_S
        for (size_t a = 0; a < dec.components.size(); ++a) {
            if (!dec.components[a].intersects(delta)) continue;
            for (size_t b = a + 1; b < dec.components.size(); ++b) {
                if (!dec.components[b].intersects(delta)) continue;
                return SwapWitness{dec.separator, dec.components[a], dec.components[b],
                                   dec.components[a]};
            }
        }
    }
    return std::nullopt;
}

ContingencyTable apply_swap(const ContingencyTable& table, const SwapPlan& plan) {
    if (table.count(plan.cell_i()) < 1)
        throw std::invalid_argument("no record at cell " + to_string(plan.cell_i()));
    if (table.count(plan.cell_j()) < 1)
        throw std::invalid_argument("no record at cell " + to_string(plan.cell_j()));
    return table.with_deltas({{plan.cell_i(), -1},
                              {plan.cell_j(), -1},
                              {plan.result_i(), +1},
                              {plan.result_j(), +1}});
}

std::optional<SwapPlan> find_partner_plan(const ContingencyTable& table, const Cell& anchor,
                                          const GeneratingClass& cls,
                                          const std::vector<SeparatorDecomposition>& seps) {
    if (anchor.size() != cls.universe_size())
        throw std::invalid_argument("cell arity does not match the class universe");
    if (table.count(anchor) < 1)
        throw std::invalid_argument("no record at cell " + to_string(anchor));
    for (const SeparatorDecomposition& dec : seps) {
        for (size_t a = 0; a < dec.components.size(); ++a) {
            for (size_t b = a + 1; b < dec.components.size(); ++b) {
                DiagonalSubtable sub = diagonal_subtable(table, anchor, dec.separator,
                                                         dec.components[a], dec.components[b]);
                if (!sub.nonempty()) continue;
                // First entry is the lexicographically smallest marginal cell;
                // pick the smallest occupied full cell projecting onto it.
                const Cell& target = sub.entries.begin()->first;
                for (const auto& [cell, n] : table.counts()) {
                    if (cell.project(sub.vars) != target) continue;
                    return SwapPlan(anchor, cell, dec.components[a]);
                }
                throw std::logic_error("diagonal subtable entry without a source cell");
            }
        }
    }
    return std::nullopt;
}

std::optional<PartnerResult> find_partner(const ContingencyTable& table, const Cell& anchor,
                                          const GeneratingClass& cls,
                                          const std::vector<SeparatorDecomposition>& seps) {
    std::optional<SwapPlan> plan = find_partner_plan(table, anchor, cls, seps);
    if (!plan) return std::nullopt;
    ContingencyTable after = apply_swap(table, *plan);
    return PartnerResult{std::move(*plan), std::move(after)};
}

PreservationReport verify_preservation(const ContingencyTable& before,
                                       const ContingencyTable& after,
                                       const GeneratingClass& cls) {
    if (!before.schema().same_layout(after.schema()))
        throw std::invalid_argument("tables with different schemas");
    PreservationReport report;
    report.pass = true;
    for (const VarSet& d : cls.members()) {
        bool ok = marginal_counts(before.counts(), d) == marginal_counts(after.counts(), d);
        report.checks.push_back({d, ok});
        if (!ok) report.pass = false;
    }
    return report;
}

}  // namespace swapsafe
