#pragma once

#include <vector>

#include "orbiroot/correspondence.hpp"
#include "orbiroot/parabolic.hpp"
#include "orbiroot/root_stack.hpp"

namespace orbiroot::testing {

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

inline ParLine par(std::int64_t d, std::vector<Rational> w) { return ParLine{d, std::move(w)}; }

inline LineObject obj(std::int64_t d, std::vector<int> res) { return LineObject{d, std::move(res)}; }

/// Every residue pattern in {0..r-1}^m.
inline std::vector<std::vector<int>> all_residues(int r, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < m && ++cur[static_cast<std::size_t>(i)] == r) {
            cur[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == m) break;
    }
    return out;
}

}  // namespace orbiroot::testing
