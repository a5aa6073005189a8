#include "swapsafe/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace swapsafe::oracle {

namespace {

// Multiset of D-projections of a two-record table {a, b}.
std::map<Cell, int> pair_margin(const Cell& a, const Cell& b, const VarSet& d) {
    std::map<Cell, int> out;
    ++out[a.project(d)];
    ++out[b.project(d)];
    return out;
}

std::vector<int> bits_to_vars(unsigned mask, int k) {
    std::vector<int> out;
    for (int m = 0; m < k; ++m)
        if (mask & (1u << m)) out.push_back(m);
    return out;
}

// Union-find connectivity check of g restricted to `kept` vertices.
bool connects(const Graph& g, const std::vector<int>& kept, int a, int b) {
    std::map<int, int> parent;
    for (int v : kept) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [x, y] : g.edges())
        if (parent.count(x) && parent.count(y)) parent[find(x)] = find(y);
    return find(a) == find(b);
}

}  // namespace

std::optional<VarSet> brute_swappable(const Cell& i, const Cell& j, const GeneratingClass& cls) {
    const int k = cls.universe_size();
    if (i.size() != k || j.size() != k)
        throw std::invalid_argument("cell arity does not match the class universe");
    if (k > 20) throw std::invalid_argument("brute_swappable is limited to 20 variables");
    if (i == j) return std::nullopt;

    // Subset masks in increasing numeric order; with variable 0 in the low
    // bit this visits candidate sets in lexicographic order of their sorted
    // element lists, as documented.
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [k](unsigned a, unsigned b) {
        return bits_to_vars(a, k) < bits_to_vars(b, k);
    });

    for (unsigned mask : masks) {
        VarSet e(bits_to_vars(mask, k));
        const Cell after_i = Cell::merge(i, j, e);
        const Cell after_j = Cell::merge(j, i, e);
        if (after_i == i || after_i == j) continue;  // not an effective swap
        bool fixes_all = true;
        for (const VarSet& d : cls.members()) {
            if (pair_margin(i, j, d) != pair_margin(after_i, after_j, d)) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) return e;
    }
    return std::nullopt;
}

std::vector<VarSet> brute_minimal_separators(const Graph& g) {
    const auto& verts = g.vertices().vars();
    const int n = static_cast<int>(verts.size());
    if (n > 8) throw std::invalid_argument("brute_minimal_separators is limited to 8 vertices");

    std::vector<VarSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> sep, rest;
        for (int t = 0; t < n; ++t)
            (mask & (1u << t) ? sep : rest).push_back(verts[static_cast<size_t>(t)]);

        bool minimal_for_some_pair = false;
        for (size_t a = 0; a < rest.size() && !minimal_for_some_pair; ++a) {
            for (size_t b = a + 1; b < rest.size() && !minimal_for_some_pair; ++b) {
                if (connects(g, rest, rest[a], rest[b])) continue;
                // restoring any single separator vertex must reconnect the pair
                bool minimal = true;
                for (int x : sep) {
                    std::vector<int> restored = rest;
                    restored.push_back(x);
                    if (!connects(g, restored, rest[a], rest[b])) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) minimal_for_some_pair = true;
            }
        }
        if (minimal_for_some_pair) out.emplace_back(VarSet(sep));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<BrutePartner> brute_partner(const ContingencyTable& table, const Cell& anchor,
                                          const GeneratingClass& cls) {
    for (const auto& [cell, count] : table.counts()) {
        if (cell == anchor) continue;
        if (std::optional<VarSet> e = brute_swappable(anchor, cell, cls))
            return BrutePartner{cell, *e};
    }
    return std::nullopt;
}

}  // namespace swapsafe::oracle
