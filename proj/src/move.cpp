#include "swapsafe/move.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace swapsafe {

Move::Move(Schema schema, std::map<Cell, long long> entries)
    : schema_(std::move(schema)), entries_(std::move(entries)) {
    long long sum = 0;
    for (const auto& [cell, z] : entries_) {
        if (cell.size() != schema_.k())
            throw std::invalid_argument("move entry arity does not match the schema");
        for (int m = 0; m < schema_.k(); ++m)
            if (cell[m] < 0 || cell[m] >= schema_.levels(m))
                throw std::invalid_argument("move entry out of range at " + to_string(cell));
        if (z == 0) throw std::invalid_argument("zero entry at " + to_string(cell));
        sum += z;
    }
    if (sum != 0)
        throw std::invalid_argument("move entries sum to " + std::to_string(sum) + ", not zero");
}

long long Move::degree() const {
    long long abs_sum = 0;
    for (const auto& [cell, z] : entries_) abs_sum += std::abs(z);
    return abs_sum / 2;
}

bool is_move(const Move& f, const GeneratingClass& cls) {
    if (f.schema().k() != cls.universe_size())
        throw std::invalid_argument("move arity does not match the class universe");
    for (const VarSet& d : cls.members()) {
        std::map<Cell, long long> margin = marginal_counts(f.entries(), d);
        for (const auto& [cell, z] : margin)
            if (z != 0) return false;
    }
    return true;
}

PrimitiveMove swap_to_move(const SwapPlan& plan) {
    PrimitiveMove m{plan.result_i(), plan.result_j(), plan.cell_i(), plan.cell_j()};
    if (m.plus_j < m.plus_i) std::swap(m.plus_i, m.plus_j);
    if (m.minus_j < m.minus_i) std::swap(m.minus_i, m.minus_j);
    return m;
}

SwapPlan move_to_swap(const PrimitiveMove& m, const GeneratingClass& cls) {
    const int k = cls.universe_size();
    for (const Cell* c : {&m.plus_i, &m.plus_j, &m.minus_i, &m.minus_j})
        if (c->size() != k)
            throw std::invalid_argument("move cell arity does not match the class universe");
    if (m.plus_i == m.plus_j || m.minus_i == m.minus_j || m.plus_i == m.minus_i ||
        m.plus_i == m.minus_j || m.plus_j == m.minus_i || m.plus_j == m.minus_j)
        throw std::invalid_argument("primitive move needs four distinct cells");

    // A degree-two move comes from a two-record swap exactly when, variable
    // by variable, the +1 cells redistribute the coordinates of the -1 cells:
    // {i'_v, j'_v} = {i_v, j_v} for every v. Given that law, the swap set is
    // forced (up to complement) as the variables where the first post cell
    // carries j's coordinate.
    const Cell &i = m.minus_i, &j = m.minus_j;
    std::vector<int> from_j;
    for (int v = 0; v < k; ++v) {
        const int a = m.plus_i[v], b = m.plus_j[v];
        if (!((a == i[v] && b == j[v]) || (a == j[v] && b == i[v])))
            throw std::invalid_argument("move is not a two-record swap: variable " +
                                        std::to_string(v + 1) +
                                        " mixes coordinates outside the source pair");
        if (a == j[v]) from_j.push_back(v);
    }
    // Distinctness of the four cells already forces E to split the
    // difference set, so it is a nonempty proper subset.
    SwapPlan plan(i, j, VarSet(std::move(from_j)));
    for (const VarSet& d : cls.members())
        if (!fixes_marginal(i, j, plan.swap_set(), d))
            throw std::invalid_argument("move disturbs the protected marginal " + to_string(d));
    return plan;
}

Move to_move(const PrimitiveMove& m, const Schema& schema) {
    std::map<Cell, long long> entries;
    entries[m.plus_i] += 1;
    entries[m.plus_j] += 1;
    entries[m.minus_i] -= 1;
    entries[m.minus_j] -= 1;
    std::erase_if(entries, [](const auto& kv) { return kv.second == 0; });
    return Move(schema, std::move(entries));
}

ContingencyTable apply_move(const ContingencyTable& table, const Move& f) {
    if (!table.schema().same_layout(f.schema()))
        throw std::invalid_argument("move schema does not match the table");
    std::vector<std::pair<Cell, long long>> deltas(f.entries().begin(), f.entries().end());
    return table.with_deltas(deltas);
}

std::string markov_basis_note(bool chordal) {
    if (chordal)
        return "decomposable model: two-record swaps connect every table with "
               "these marginals, so a negative pairwise verdict is final";
    return "non-decomposable model: two-record swaps may be insufficient, so a "
           "negative pairwise verdict does not rule out swaps of three or more records";
}

}  // namespace swapsafe
