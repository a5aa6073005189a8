#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace swapsafe {

/// A sorted set of variable indices (0-based internally; rendered 1-based
/// for display). Used for marginal index sets, difference sets, separators,
/// graph vertex sets and swap sets.
class VarSet {
public:
    VarSet() = default;

    VarSet(std::initializer_list<int> vars) : vars_(vars) { canonicalize(); }

    explicit VarSet(std::vector<int> vars) : vars_(std::move(vars)) { canonicalize(); }

    /// The full variable set {0, ..., k-1}.
    static VarSet full(int k) {
        std::vector<int> v(static_cast<size_t>(std::max(k, 0)));
        for (int m = 0; m < k; ++m) v[static_cast<size_t>(m)] = m;
        VarSet s;
        s.vars_ = std::move(v);
        return s;
    }

    bool empty() const { return vars_.empty(); }
    int size() const { return static_cast<int>(vars_.size()); }

    bool contains(int v) const {
        return std::binary_search(vars_.begin(), vars_.end(), v);
    }

    int min() const {
        if (vars_.empty()) throw std::invalid_argument("min() of empty variable set");
        return vars_.front();
    }

    const std::vector<int>& vars() const { return vars_; }
    auto begin() const { return vars_.begin(); }
    auto end() const { return vars_.end(); }

    bool subset_of(const VarSet& other) const {
        return std::includes(other.vars_.begin(), other.vars_.end(),
                             vars_.begin(), vars_.end());
    }

    bool intersects(const VarSet& other) const {
        auto a = vars_.begin();
        auto b = other.vars_.begin();
        while (a != vars_.end() && b != other.vars_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    VarSet complement_in(int k) const;

    friend VarSet operator|(const VarSet& a, const VarSet& b) {
        std::vector<int> out;
        out.reserve(a.vars_.size() + b.vars_.size());
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(out));
        VarSet s;
        s.vars_ = std::move(out);
        return s;
    }

    friend VarSet operator&(const VarSet& a, const VarSet& b) {
        std::vector<int> out;
        std::set_intersection(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                              std::back_inserter(out));
        VarSet s;
        s.vars_ = std::move(out);
        return s;
    }

    friend VarSet operator-(const VarSet& a, const VarSet& b) {
        std::vector<int> out;
        std::set_difference(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                            std::back_inserter(out));
        VarSet s;
        s.vars_ = std::move(out);
        return s;
    }

    auto operator<=>(const VarSet&) const = default;

private:
    void canonicalize() {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (!vars_.empty() && vars_.front() < 0)
            throw std::invalid_argument("negative variable index");
    }

    std::vector<int> vars_;
};

inline VarSet VarSet::complement_in(int k) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k));
    auto it = vars_.begin();
    for (int m = 0; m < k; ++m) {
        if (it != vars_.end() && *it == m) { ++it; continue; }
        out.push_back(m);
    }
    VarSet s;
    s.vars_ = std::move(out);
    return s;
}

/// Renders as "{2,3}" with 1-based indices, matching how variables are
/// numbered in reports and error messages.
inline std::string to_string(const VarSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace swapsafe
