#pragma once

#include <cstddef>
#include <vector>

#include "petersen/integer.hpp"

namespace petersen {

// Counts u_n^{(sig)} of admissible subgraphs of G'(n,k), indexed by catalog position.
struct StateVector {
    int n = 0;
    std::vector<Integer> values;

    std::size_t size() const { return values.size(); }
    const Integer& operator[](std::size_t i) const { return values[i]; }
    Integer& operator[](std::size_t i) { return values[i]; }

    bool is_zero() const {
        for (const auto& v : values)
            if (sgn(v) != 0) return false;
        return true;
    }

    friend bool operator==(const StateVector& a, const StateVector& b) {
        return a.n == b.n && a.values == b.values;
    }
};

}  // namespace petersen
