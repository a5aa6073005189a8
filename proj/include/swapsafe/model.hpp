#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "swapsafe/varset.hpp"

namespace swapsafe {

/// Undirected graph on variable indices. Vertices need not be contiguous
/// (induced subgraphs keep their original labels).
class Graph {
public:
    Graph() = default;
    Graph(VarSet vertices, const std::vector<std::pair<int, int>>& edges);

    const VarSet& vertices() const { return vertices_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    bool contains(int v) const { return vertices_.contains(v); }
    bool has_edge(int a, int b) const;
    const VarSet& neighbors(int v) const;

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    VarSet vertices_;
    std::map<int, VarSet> adj_;
    std::set<std::pair<int, int>> edges_;  // normalized a < b
};

/// An antichain of variable subsets whose marginals are protected. The
/// universe is the schema's full variable set; members may leave some
/// variables uncovered (those are unconstrained by any marginal).
class GeneratingClass {
public:
    GeneratingClass(std::vector<VarSet> members, int universe_size);

    const std::vector<VarSet>& members() const { return members_; }
    int universe_size() const { return universe_size_; }

    /// Union of the members: the variables actually constrained.
    const VarSet& effective_vars() const { return effective_; }

private:
    std::vector<VarSet> members_;  // sorted, antichain
    int universe_size_ = 0;
    VarSet effective_;
};

struct NormalizedClass {
    GeneratingClass cls;
    VarSet effective;  // union of the kept members
    bool shrunk;       // true when effective is a proper subset of the universe
};

/// Drops members contained in another member (antichain rule) and reports
/// whether the union covers the universe. Throws on an empty list or an
/// empty member.
NormalizedClass normalize_generating_class(std::vector<VarSet> sets, int universe_size);

/// The graph generated by the class: vertex set is the full universe, edge
/// {s,t} iff some member contains both. Uncovered variables are isolated
/// vertices.
Graph generated_graph(const GeneratingClass& cls);

Graph induced_subgraph(const Graph& g, const VarSet& v);

/// Connectivity partition, components ordered by smallest contained vertex.
std::vector<VarSet> connected_components(const Graph& g);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering (first vertex eliminated first); empty
    /// when not chordal.
    std::vector<int> elimination_order;

    explicit operator bool() const { return chordal; }
};

/// Maximum cardinality search plus a perfect-elimination check.
ChordalityResult is_chordal(const Graph& g);

struct SeparatorDecomposition {
    VarSet separator;
    std::vector<VarSet> components;  // components of G minus the separator

    bool operator==(const SeparatorDecomposition& other) const {
        return separator == other.separator && components == other.components;
    }
};

/// All minimal vertex separators of g, each paired with the connected
/// components of the graph without it, sorted lexicographically by
/// separator. A disconnected graph contributes the empty separator; a
/// connected complete graph has none.
std::vector<SeparatorDecomposition> minimal_separators(const Graph& g);

/// Diagnostic cross-check: every separator induces a complete subgraph
/// (always true for chordal graphs). Vacuously true on an empty list.
bool separators_induce_cliques(const Graph& g, const std::vector<SeparatorDecomposition>& seps);

}  // namespace swapsafe
