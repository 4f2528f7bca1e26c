#include "quset/quset.hpp"

#include <cmath>
#include <string>

#include "quset/error.hpp"
#include "quset/tolerances.hpp"

namespace quset {

namespace {

void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) {
        throw DomainError("grid mismatch: side " + std::to_string(a.side) +
                          " vs side " + std::to_string(b.side));
    }
}

double norm_squared(const std::vector<Amplitude>& amp) {
    double sum = 0.0;
    for (const auto& a : amp) sum += std::norm(a);
    return sum;
}

} // namespace

QuSet::QuSet(GridSpec grid, std::vector<Amplitude> amplitudes)
    : grid_(grid), amp_(std::move(amplitudes)) {
    if (amp_.size() != static_cast<std::size_t>(grid_.cell_count())) {
        throw DomainError("quantum set needs " + std::to_string(grid_.cell_count()) +
                          " amplitudes, got " + std::to_string(amp_.size()));
    }
    for (std::size_t k = 0; k < amp_.size(); ++k) {
        // Written to also reject non-finite amplitudes.
        if (!(std::norm(amp_[k]) <= 1.0 + kNormEps)) {
            throw DomainError("amplitude magnitude exceeds 1 at flat index " +
                              std::to_string(k + 1));
        }
    }
    const double n2 = norm_squared(amp_);
    if (!(std::abs(n2 - 1.0) <= kNormEps)) {
        throw DomainError("amplitudes have squared norm " + std::to_string(n2) +
                          ", expected 1");
    }
}

QuSet QuSet::basis(GridSpec grid, FlatIndex k) {
    if (k.value < 1 || k.value > grid.cell_count()) {
        throw DomainError("basis index " + std::to_string(k.value) + " outside [1 .. " +
                          std::to_string(grid.cell_count()) + "]");
    }
    std::vector<Amplitude> amp(static_cast<std::size_t>(grid.cell_count()), Amplitude{0.0, 0.0});
    amp[offset_of(k)] = Amplitude{1.0, 0.0};
    return QuSet(grid, std::move(amp));
}

QuSet QuSet::basis(GridSpec grid, Dot d) { return basis(grid, flatten(d, grid)); }

QuSet normalize(GridSpec grid, std::vector<Amplitude> raw) {
    if (raw.size() != static_cast<std::size_t>(grid.cell_count())) {
        throw DomainError("raw vector needs " + std::to_string(grid.cell_count()) +
                          " entries, got " + std::to_string(raw.size()));
    }
    const double n2 = norm_squared(raw);
    if (n2 <= 0.0) {
        throw DomainError("degenerate state: zero vector cannot be normalized");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : raw) a *= inv;
    return QuSet(grid, std::move(raw));
}

QuSet from_fuzzy_sqrt(const StandardizedFuzzySet& p) {
    std::vector<Amplitude> amp(p.probabilities().size());
    for (std::size_t k = 0; k < amp.size(); ++k) {
        amp[k] = Amplitude{std::sqrt(p[k]), 0.0};
    }
    return QuSet(p.grid(), std::move(amp));
}

StandardizedFuzzySet probabilities(const QuSet& q) {
    std::vector<double> p(q.amplitudes().size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(q[k]);
    return StandardizedFuzzySet(q.grid(), std::move(p));
}

Amplitude inner(const QuSet& q, const QuSet& q_prime) {
    require_same_grid(q.grid(), q_prime.grid());
    Amplitude h{0.0, 0.0};
    for (std::size_t k = 0; k < q.amplitudes().size(); ++k) {
        h += q[k] * std::conj(q_prime[k]);
    }
    return h;
}

double overlap_probability(const QuSet& q, const QuSet& q_prime) {
    return std::norm(inner(q, q_prime));
}

} // namespace quset
