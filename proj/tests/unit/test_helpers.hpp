#pragma once

#include "schatten/matrix.hpp"
#include "schatten/rng.hpp"

namespace schatten::testing {

/// Symmetric matrix with mixed-sign entries uniform on [-1, 1].
inline SymmetricMatrix random_symmetric(int d, std::uint64_t seed, double scale = 1.0) {
    Rng rng(seed);
    SymmetricMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) m.set(i, j, scale * rng.uniform(-1.0, 1.0));
    return m;
}

inline double rel_err(double got, double want) {
    const double denom = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / denom;
}

} // namespace schatten::testing
