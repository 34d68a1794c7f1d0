#pragma once

// Values frozen after the brute-force oracle in test_oracle.cpp reproduced
// them; the oracle tests keep checking that they still agree.

#include <string>
#include <vector>

#include "dualpolar/forms.hpp"

namespace goldens {

struct Instance {
    dualpolar::forms::Family family;
    const char* tag;
    int d;
    int r;
    std::vector<long> level_sizes; // |Omega_0| .. |Omega_d|
    std::vector<int> multiplicities;
    long lambda1;
};

inline const std::vector<Instance>& instances()
{
    using F = dualpolar::forms::Family;
    static const std::vector<Instance> all{
        {F::C, "C", 2, 2, {1, 15, 15}, {1, 9, 5}, 4},
        {F::C, "C", 3, 2, {1, 63, 315, 135}, {1, 35, 84, 15}, 24},
        {F::B, "B", 2, 3, {1, 40, 40}, {1, 24, 15}, 6},
        {F::D, "D", 3, 2, {1, 35, 105, 30}, {1, 14, 14, 1}, 12},
        {F::TwistedD, "2D", 2, 2, {1, 27, 45}, {1, 20, 24}, 6},
        {F::UnitaryEven, "2A-even", 2, 2, {1, 45, 27}, {1, 20, 6}, 6},
        {F::UnitaryOdd, "2A-odd", 2, 2, {1, 165, 297}, {1, 120, 176}, 12},
    };
    return all;
}

} // namespace goldens
