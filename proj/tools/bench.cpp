// Benchmark for the OpenMP kernels against their serial references on a
// synthetic dataset: marginal reduction and the partner sweep over all
// sample uniques. Results must agree exactly; the tool fails loudly if not.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swapsafe/model.hpp"
#include "swapsafe/parallel.hpp"
#include "swapsafe/swap.hpp"
#include "swapsafe/synthetic.hpp"
#include "swapsafe/table.hpp"

using namespace swapsafe;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Overlapping chains of three variables: {1,2,3}, {3,4,5}, {5,6,7}, ... plus
// a trailing pair when one variable is left over. Decomposable by
// construction.
std::vector<VarSet> chain_cliques(int k) {
    std::vector<VarSet> out;
    int m = 0;
    while (m + 2 < k) {
        out.push_back(VarSet{m, m + 1, m + 2});
        m += 2;
    }
    if (m + 1 < k) out.push_back(VarSet{m, m + 1});
    if (out.empty()) out.push_back(VarSet::full(k));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel benchmark"};
    int records = 10000;
    int vars = 8;
    int max_levels = 10;
    std::uint64_t seed = 1;
    double skew = 0.65;
    app.add_option("--records", records, "synthetic record count")->check(CLI::PositiveNumber);
    app.add_option("--vars", vars, "variable count")->check(CLI::Range(2, 16));
    app.add_option("--levels", max_levels, "largest level count")->check(CLI::Range(2, 64));
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--skew", skew, "level-probability decay in (0,1]");
    CLI11_PARSE(app, argc, argv);

    SyntheticSpec spec;
    for (int m = 0; m < vars; ++m) spec.levels.push_back(std::max(2, max_levels - m));
    spec.records = records;
    spec.seed = seed;
    spec.skew = skew;

    MicrodataTable data = synthetic_microdata(spec);
    ContingencyTable table = to_contingency(data);
    GeneratingClass cls(chain_cliques(vars), vars);
    std::vector<SeparatorDecomposition> seps = minimal_separators(generated_graph(cls));
    std::vector<Cell> uniques = sample_uniques(table);

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "records: " << data.n() << ", occupied cells: " << table.counts().size()
              << ", sample uniques: " << uniques.size() << "\n";

    // Marginal reduction over every protected marginal, repeated to get a
    // measurable duration.
    const int reps = 20;
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        for (const VarSet& d : cls.members()) (void)marginal(table, d);
    double serial_marginal = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        for (const VarSet& d : cls.members()) (void)marginal_parallel(table, d);
    double parallel_marginal = seconds_since(t0);

    for (const VarSet& d : cls.members())
        if (!(marginal(table, d) == marginal_parallel(table, d))) {
            std::cerr << "kernel mismatch on marginal " << to_string(d) << "\n";
            return 1;
        }

    std::printf("marginals  x%d: serial %.3fs, parallel %.3fs, speedup %.2fx\n", reps,
                serial_marginal, parallel_marginal,
                parallel_marginal > 0 ? serial_marginal / parallel_marginal : 0.0);

    t0 = std::chrono::steady_clock::now();
    auto serial_plans = sweep_partners_serial(table, uniques, cls, seps);
    double serial_sweep = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel_plans = sweep_partners(table, uniques, cls, seps);
    double parallel_sweep = seconds_since(t0);

    if (serial_plans.size() != parallel_plans.size()) {
        std::cerr << "kernel mismatch: sweep result sizes differ\n";
        return 1;
    }
    size_t found = 0;
    for (size_t r = 0; r < serial_plans.size(); ++r) {
        const auto &a = serial_plans[r], &b = parallel_plans[r];
        if (a.has_value() != b.has_value() || (a && !(*a == *b))) {
            std::cerr << "kernel mismatch on anchor " << to_string(uniques[r]) << "\n";
            return 1;
        }
        if (a) ++found;
    }

    std::printf("partner sweep over %zu uniques: serial %.3fs, parallel %.3fs, speedup %.2fx\n",
                uniques.size(), serial_sweep, parallel_sweep,
                parallel_sweep > 0 ? serial_sweep / parallel_sweep : 0.0);
    std::printf("partners found: %zu of %zu\n", found, uniques.size());
    std::cout << "kernels agree with the serial references\n";
    return 0;
}
