#pragma once

#include <cstdint>
#include <vector>

#include "swapsafe/table.hpp"

namespace swapsafe {

struct SyntheticSpec {
    std::vector<int> levels;  // one entry per variable
    int records = 1000;
    std::uint64_t seed = 1;
    /// Geometric decay of level probabilities; smaller values skew harder
    /// and leave fewer sample uniques.
    double skew = 0.65;
};

/// Deterministic synthetic microdata: independent skewed categorical draws
/// per variable. Variable names are v1..vk with numeric categories.
MicrodataTable synthetic_microdata(const SyntheticSpec& spec);

}  // namespace swapsafe
