#ifndef MYB_SWEEP_HPP
#define MYB_SWEEP_HPP

#include "myb/bracket.hpp"
#include "myb/report.hpp"

#include <vector>

namespace myb {

// Basis indices an identity check enumerates: the full basis for a finite
// bracket, [-W, W] for a rule bracket.  Output indices of a rule bracket may
// leave the window; only inputs are enumerated.
std::vector<BasisIndex> check_window(const BracketMap& br, long long window);

// Sweep all ordered pairs / triples in lexicographic order, comparing the
// two sides produced by `sides(indices..., lhs, rhs)`.  Stops at the first
// failing tuple.
template <typename Sides>
CheckReport sweep_pairs(std::string name, const std::vector<BasisIndex>& idx, Sides sides) {
    long long tuples = 0;
    for (BasisIndex i : idx)
        for (BasisIndex j : idx) {
            Element lhs, rhs;
            sides(i, j, lhs, rhs);
            ++tuples;
            if (lhs != rhs)
                return CheckReport::fail(std::move(name), tuples, {{i, j}, lhs, rhs});
        }
    return CheckReport::pass(std::move(name), tuples);
}

template <typename Sides>
CheckReport sweep_triples(std::string name, const std::vector<BasisIndex>& idx, Sides sides) {
    long long tuples = 0;
    for (BasisIndex i : idx)
        for (BasisIndex j : idx)
            for (BasisIndex k : idx) {
                Element lhs, rhs;
                sides(i, j, k, lhs, rhs);
                ++tuples;
                if (lhs != rhs)
                    return CheckReport::fail(std::move(name), tuples, {{i, j, k}, lhs, rhs});
            }
    return CheckReport::pass(std::move(name), tuples);
}

}  // namespace myb

#endif
