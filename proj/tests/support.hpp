#pragma once

// Seeded random-input generators shared by the property tests. Gaussians come
// from Box-Muller over the library Rng so generated inputs are identical on
// every platform.

#include <cmath>
#include <complex>
#include <vector>

#include "quset/fuzzy.hpp"
#include "quset/operators.hpp"
#include "quset/quset.hpp"
#include "quset/rng.hpp"

namespace testsupport {

inline double gaussian(quset::Rng& rng) {
    double u = rng.uniform01();
    while (u <= 0.0) u = rng.uniform01();
    const double v = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

inline std::vector<quset::Amplitude> random_raw_vector(quset::Rng& rng,
                                                       const quset::GridSpec& grid,
                                                       bool complex_valued = true) {
    std::vector<quset::Amplitude> raw(static_cast<std::size_t>(grid.cell_count()));
    for (auto& a : raw) {
        const double re = gaussian(rng);
        const double im = complex_valued ? gaussian(rng) : 0.0;
        a = quset::Amplitude{re, im};
    }
    return raw;
}

inline quset::QuSet random_quset(quset::Rng& rng, const quset::GridSpec& grid,
                                 bool complex_valued = true) {
    auto raw = random_raw_vector(rng, grid, complex_valued);
    // A zero gaussian vector has probability zero; regenerate defensively.
    double norm2 = 0.0;
    for (const auto& a : raw) norm2 += std::norm(a);
    while (norm2 == 0.0) {
        raw = random_raw_vector(rng, grid, complex_valued);
        norm2 = 0.0;
        for (const auto& a : raw) norm2 += std::norm(a);
    }
    return quset::normalize(grid, std::move(raw));
}

inline quset::FuzzySet random_fuzzy(quset::Rng& rng, const quset::GridSpec& grid) {
    std::vector<double> values(static_cast<std::size_t>(grid.cell_count()));
    for (auto& v : values) v = rng.uniform01();
    return quset::FuzzySet(grid, std::move(values));
}

inline quset::StandardizedFuzzySet random_standardized(quset::Rng& rng,
                                                       const quset::GridSpec& grid) {
    // Strictly positive mass by construction.
    std::vector<double> values(static_cast<std::size_t>(grid.cell_count()));
    for (auto& v : values) v = 0.001 + 0.999 * rng.uniform01();
    return quset::standardize(quset::FuzzySet(grid, std::move(values)));
}

// Orthonormal random states via Gram-Schmidt on gaussian vectors. Kept in
// test code so family/diagonalization tests do not depend on the
// implementation they check.
inline std::vector<quset::QuSet> random_orthonormal_states(quset::Rng& rng,
                                                           const quset::GridSpec& grid,
                                                           std::size_t count,
                                                           bool complex_valued = true) {
    const std::size_t m = static_cast<std::size_t>(grid.cell_count());
    std::vector<std::vector<quset::Amplitude>> basis;
    while (basis.size() < count) {
        auto v = random_raw_vector(rng, grid, complex_valued);
        for (const auto& b : basis) {
            quset::Amplitude coefficient{0.0, 0.0};
            for (std::size_t k = 0; k < m; ++k) coefficient += std::conj(b[k]) * v[k];
            for (std::size_t k = 0; k < m; ++k) v[k] -= coefficient * b[k];
        }
        double norm2 = 0.0;
        for (const auto& a : v) norm2 += std::norm(a);
        if (norm2 < 1e-6) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& a : v) a *= inv;
        basis.push_back(std::move(v));
    }
    std::vector<quset::QuSet> states;
    states.reserve(count);
    for (auto& b : basis) states.emplace_back(grid, std::move(b));
    return states;
}

} // namespace testsupport
