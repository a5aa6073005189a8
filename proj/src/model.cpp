#include "swapsafe/model.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace swapsafe {

Graph::Graph(VarSet vertices, const std::vector<std::pair<int, int>>& edges)
    : vertices_(std::move(vertices)) {
    std::map<int, std::vector<int>> adj;
    for (int v : vertices_) adj[v];
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a + 1));
        if (!vertices_.contains(a) || !vertices_.contains(b))
            throw std::invalid_argument("edge endpoint is not a vertex");
        if (a > b) std::swap(a, b);
        if (!edges_.insert({a, b}).second) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [v, nbrs] : adj) adj_.emplace(v, VarSet(std::move(nbrs)));
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges_.count({a, b}) > 0;
}

const VarSet& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("no such vertex: " + std::to_string(v + 1));
    return it->second;
}

GeneratingClass::GeneratingClass(std::vector<VarSet> members, int universe_size)
    : members_(std::move(members)), universe_size_(universe_size) {
    if (universe_size_ < 1) throw std::invalid_argument("universe must have at least one variable");
    if (members_.empty()) throw std::invalid_argument("generating class has no members");
    for (const VarSet& d : members_) {
        if (d.empty()) throw std::invalid_argument("empty generating set");
        if (d.vars().back() >= universe_size_)
            throw std::invalid_argument(
                "generating set mentions variable " + std::to_string(d.vars().back() + 1) +
                " beyond universe of size " + std::to_string(universe_size_));
        effective_ = effective_ | d;
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NormalizedClass normalize_generating_class(std::vector<VarSet> sets, int universe_size) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    // Keep only maximal members; a set inside another adds no constraint.
    std::vector<VarSet> maximal;
    for (const VarSet& d : sets) {
        bool dominated = false;
        for (const VarSet& e : sets)
            if (d != e && d.subset_of(e)) dominated = true;
        if (!dominated) maximal.push_back(d);
    }
    GeneratingClass cls(std::move(maximal), universe_size);
    VarSet effective = cls.effective_vars();
    bool shrunk = effective.size() < universe_size;
    return NormalizedClass{std::move(cls), std::move(effective), shrunk};
}

Graph generated_graph(const GeneratingClass& cls) {
    // Vertices are all the table's variables, not just the constrained ones;
    // a variable outside every generating set stays isolated.
    std::vector<std::pair<int, int>> edges;
    for (const VarSet& d : cls.members()) {
        const auto& vs = d.vars();
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) edges.emplace_back(vs[a], vs[b]);
    }
    return Graph(VarSet::full(cls.universe_size()), edges);
}

Graph induced_subgraph(const Graph& g, const VarSet& v) {
    for (int x : v)
        if (!g.contains(x))
            throw std::invalid_argument("induced subgraph on non-vertex " + std::to_string(x + 1));
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges())
        if (v.contains(a) && v.contains(b)) edges.emplace_back(a, b);
    return Graph(v, edges);
}

std::vector<VarSet> connected_components(const Graph& g) {
    // BFS from ascending start vertices already orders the components by
    // their smallest member.
    std::vector<VarSet> out;
    std::set<int> seen;
    for (int start : g.vertices()) {
        if (seen.count(start)) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        out.emplace_back(VarSet(std::move(comp)));
    }
    return out;
}

ChordalityResult is_chordal(const Graph& g) {
    // Maximum cardinality search; the reverse of the visit order is a perfect
    // elimination ordering iff the graph is chordal.
    const auto& verts = g.vertices().vars();
    const int n = static_cast<int>(verts.size());
    if (n == 0) return {true, {}};

    std::map<int, int> weight;
    std::set<int> remaining(verts.begin(), verts.end());
    for (int v : verts) weight[v] = 0;

    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    while (!remaining.empty()) {
        int best = -1, best_w = -1;
        for (int v : remaining)
            if (weight[v] > best_w) {
                best = v;
                best_w = weight[v];
            }
        remaining.erase(best);
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (remaining.count(w)) ++weight[w];
    }

    std::map<int, int> pos;
    for (int t = 0; t < n; ++t) pos[order[static_cast<size_t>(t)]] = t;

    // Perfect elimination check: each vertex's earlier-visited neighbors must
    // all be adjacent to the latest of them.
    for (int t = 0; t < n; ++t) {
        int v = order[static_cast<size_t>(t)];
        std::vector<int> earlier;
        for (int w : g.neighbors(v))
            if (pos[w] < t) earlier.push_back(w);
        if (earlier.empty()) continue;
        int latest = *std::max_element(earlier.begin(), earlier.end(),
                                       [&](int a, int b) { return pos[a] < pos[b]; });
        for (int w : earlier)
            if (w != latest && !g.has_edge(latest, w)) return {false, {}};
    }

    return {true, std::vector<int>(order.rbegin(), order.rend())};
}

namespace {

VarSet neighborhood(const Graph& g, const VarSet& s) {
    VarSet out;
    for (int v : s) out = out | g.neighbors(v);
    return out - s;
}

std::vector<VarSet> components_avoiding(const Graph& g, const VarSet& removed) {
    return connected_components(induced_subgraph(g, g.vertices() - removed));
}

}  // namespace

std::vector<SeparatorDecomposition> minimal_separators(const Graph& g) {
    // Generation by neighborhood substitution: seed with the neighborhoods of
    // the components of G minus each closed neighborhood N[v], then repeatedly
    // take any found separator S, any x in S, and the neighborhoods of the
    // components of G minus (S union N(x)). Every set so produced has two
    // components of G - S seeing all of it, hence is a minimal separator, and
    // the closure reaches them all. On a disconnected graph the seeds include
    // the empty set.
    std::set<VarSet> found;
    std::deque<VarSet> queue;
    auto offer = [&](const VarSet& s) {
        if (found.insert(s).second) queue.push_back(s);
    };

    for (int v : g.vertices()) {
        VarSet closed = g.neighbors(v) | VarSet{v};
        for (const VarSet& c : components_avoiding(g, closed)) offer(neighborhood(g, c));
    }
    while (!queue.empty()) {
        VarSet s = queue.front();
        queue.pop_front();
        for (int x : s)
            for (const VarSet& c : components_avoiding(g, s | g.neighbors(x)))
                offer(neighborhood(g, c));
    }

    std::vector<SeparatorDecomposition> out;
    out.reserve(found.size());
    for (const VarSet& s : found) out.push_back({s, components_avoiding(g, s)});
    return out;
}

bool separators_induce_cliques(const Graph& g, const std::vector<SeparatorDecomposition>& seps) {
    for (const SeparatorDecomposition& dec : seps) {
        const auto& vs = dec.separator.vars();
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (!g.has_edge(vs[a], vs[b])) return false;
    }
    return true;
}

}  // namespace swapsafe
