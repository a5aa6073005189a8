#pragma once

#include <map>
#include <string>

#include "swapsafe/model.hpp"
#include "swapsafe/swap.hpp"
#include "swapsafe/table.hpp"

namespace swapsafe {

/// A sparse integer-valued array over cells. Entries are nonzero and sum to
/// zero (the grand total is fixed by any protected marginal).
class Move {
public:
    Move(Schema schema, std::map<Cell, long long> entries);

    const Schema& schema() const { return schema_; }
    const std::map<Cell, long long>& entries() const { return entries_; }

    /// Half the sum of absolute entry values (degree-2 = primitive).
    long long degree() const;

private:
    Schema schema_;
    std::map<Cell, long long> entries_;
};

/// True iff every protected marginal of the move is identically zero.
bool is_move(const Move& f, const GeneratingClass& cls);

/// The degree-2 move: +1 at two cells, -1 at two cells, all four distinct.
/// Stored with each signed pair sorted for a canonical representation.
struct PrimitiveMove {
    Cell plus_i, plus_j;    // +1 cells, plus_i < plus_j
    Cell minus_i, minus_j;  // -1 cells, minus_i < minus_j

    bool operator==(const PrimitiveMove& other) const = default;
};

/// The difference table of a swap: -1 at the source cells, +1 at the
/// post-swap cells.
PrimitiveMove swap_to_move(const SwapPlan& plan);

/// Expresses a primitive move valid for the class as a two-record swap:
/// verifies the move property and the coordinate multiset law
/// {i_m, j_m} = {i'_m, j'_m}, then recovers E = {m : i'_m = j_m}. Throws
/// when the move is not expressible as a swap of two records.
SwapPlan move_to_swap(const PrimitiveMove& m, const GeneratingClass& cls);

Move to_move(const PrimitiveMove& m, const Schema& schema);

/// Adds the move to the table. Throws if any count would go negative.
ContingencyTable apply_move(const ContingencyTable& table, const Move& f);

/// Informational note on what pairwise swap verdicts mean for the model:
/// with a chordal generated graph two-record swaps reach everything a
/// multi-record swap could; otherwise a negative pairwise verdict is
/// inconclusive for swaps of three or more records.
std::string markov_basis_note(bool chordal);

}  // namespace swapsafe
