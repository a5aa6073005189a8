#include "swapsafe/synthetic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace swapsafe {

MicrodataTable synthetic_microdata(const SyntheticSpec& spec) {
    if (spec.levels.empty()) throw std::invalid_argument("synthetic spec needs variables");
    if (spec.records < 1) throw std::invalid_argument("synthetic spec needs records");
    if (!(spec.skew > 0.0) || spec.skew > 1.0)
        throw std::invalid_argument("skew must be in (0, 1]");

    std::vector<Variable> vars;
    for (size_t m = 0; m < spec.levels.size(); ++m) {
        if (spec.levels[m] < 2)
            throw std::invalid_argument("every variable needs at least two levels");
        vars.push_back(Variable{"v" + std::to_string(m + 1), spec.levels[m], {}});
    }
    Schema schema(std::move(vars));

    // Geometric level weights skew^0, skew^1, ... per variable; independent
    // draws keep the generator trivial while still producing rare cells.
    std::vector<std::discrete_distribution<int>> dists;
    for (int levels : spec.levels) {
        std::vector<double> w(static_cast<size_t>(levels));
        double p = 1.0;
        for (int t = 0; t < levels; ++t, p *= spec.skew) w[static_cast<size_t>(t)] = p;
        dists.emplace_back(w.begin(), w.end());
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<Record> records;
    records.reserve(static_cast<size_t>(spec.records));
    for (int r = 0; r < spec.records; ++r) {
        std::vector<int> coords(spec.levels.size());
        std::vector<std::string> fields(spec.levels.size());
        for (size_t m = 0; m < spec.levels.size(); ++m) {
            coords[m] = dists[m](rng);
            fields[m] = std::to_string(coords[m] + 1);
        }
        records.push_back(Record{r + 1, Cell(std::move(coords)), std::move(fields)});
    }
    return MicrodataTable(std::move(schema), std::move(records), true);
}

}  // namespace swapsafe
