#include "swapsafe/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swapsafe {

ContingencyTable marginal_parallel(const ContingencyTable& table, const VarSet& d) {
    if (d.empty()) throw std::invalid_argument("marginal over an empty variable set");
    Schema restricted = sub_schema(table.schema(), d);

    // Flatten once so chunks can be handed to threads; each thread fills a
    // local accumulator and the partial maps are merged at the end.
    std::vector<std::pair<const Cell*, long long>> flat;
    flat.reserve(table.counts().size());
    for (const auto& [cell, n] : table.counts()) flat.emplace_back(&cell, n);
    const int size = static_cast<int>(flat.size());

#ifdef _OPENMP
    const int threads = std::max(1, omp_get_max_threads());
#else
    const int threads = 1;
#endif
    std::vector<std::map<Cell, long long>> partial(static_cast<size_t>(threads));

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
        std::map<Cell, long long>& local = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (int t = 0; t < size; ++t)
            local[flat[static_cast<size_t>(t)].first->project(d)] +=
                flat[static_cast<size_t>(t)].second;
    }
#else
    for (int t = 0; t < size; ++t)
        partial[0][flat[static_cast<size_t>(t)].first->project(d)] +=
            flat[static_cast<size_t>(t)].second;
#endif

    std::map<Cell, long long> merged = std::move(partial[0]);
    for (size_t w = 1; w < partial.size(); ++w)
        for (const auto& [cell, n] : partial[w]) merged[cell] += n;
    return ContingencyTable(std::move(restricted), std::move(merged));
}

std::vector<std::optional<SwapPlan>> sweep_partners_serial(
    const ContingencyTable& table, const std::vector<Cell>& anchors, const GeneratingClass& cls,
    const std::vector<SeparatorDecomposition>& seps) {
    std::vector<std::optional<SwapPlan>> out(anchors.size());
    for (size_t r = 0; r < anchors.size(); ++r)
        out[r] = find_partner_plan(table, anchors[r], cls, seps);
    return out;
}

std::vector<std::optional<SwapPlan>> sweep_partners(const ContingencyTable& table,
                                                    const std::vector<Cell>& anchors,
                                                    const GeneratingClass& cls,
                                                    const std::vector<SeparatorDecomposition>& seps) {
    const int size = static_cast<int>(anchors.size());
    std::vector<std::optional<SwapPlan>> out(anchors.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int r = 0; r < size; ++r)
        out[static_cast<size_t>(r)] =
            find_partner_plan(table, anchors[static_cast<size_t>(r)], cls, seps);
    return out;
}

}  // namespace swapsafe
