#include "quset/fuzzy.hpp"

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

} // namespace

CrispSet::CrispSet(GridSpec grid)
    : grid_(grid), membership_(static_cast<std::size_t>(grid.cell_count()), 0) {}

CrispSet::CrispSet(GridSpec grid, std::vector<std::uint8_t> membership)
    : grid_(grid), membership_(std::move(membership)) {
    if (membership_.size() != static_cast<std::size_t>(grid_.cell_count())) {
        throw DomainError("crisp set needs " + std::to_string(grid_.cell_count()) +
                          " cells, got " + std::to_string(membership_.size()));
    }
    for (auto& m : membership_) m = m ? 1 : 0;
}

CrispSet CrispSet::full(GridSpec grid) {
    CrispSet s(grid);
    for (auto& m : s.membership_) m = 1;
    return s;
}

bool CrispSet::contains(Dot d) const { return membership_[offset_of(d, grid_)] != 0; }
void CrispSet::insert(Dot d) { membership_[offset_of(d, grid_)] = 1; }
void CrispSet::erase(Dot d) { membership_[offset_of(d, grid_)] = 0; }

CrispSet crisp_not(const CrispSet& a) {
    std::vector<std::uint8_t> out(a.membership().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.at(k) ? 0 : 1;
    return CrispSet(a.grid(), std::move(out));
}

CrispSet crisp_and(const CrispSet& a, const CrispSet& b) {
    require_same_grid(a.grid(), b.grid());
    std::vector<std::uint8_t> out(a.membership().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (a.at(k) && b.at(k)) ? 1 : 0;
    return CrispSet(a.grid(), std::move(out));
}

CrispSet crisp_or(const CrispSet& a, const CrispSet& b) {
    require_same_grid(a.grid(), b.grid());
    std::vector<std::uint8_t> out(a.membership().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (a.at(k) || b.at(k)) ? 1 : 0;
    return CrispSet(a.grid(), std::move(out));
}

FuzzySet::FuzzySet(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.cell_count())) {
        throw DomainError("fuzzy set needs " + std::to_string(grid_.cell_count()) +
                          " cells, got " + std::to_string(values_.size()));
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double v = values_[k];
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("adequacy value " + std::to_string(v) + " at flat index " +
                              std::to_string(k + 1) + " outside [0, 1]");
        }
    }
}

FuzzySet FuzzySet::constant(GridSpec grid, double value) {
    return FuzzySet(grid, std::vector<double>(static_cast<std::size_t>(grid.cell_count()), value));
}

double FuzzySet::at(Dot d) const { return values_[offset_of(d, grid_)]; }

double FuzzySet::total_mass() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum;
}

FuzzySet crisp_to_fuzzy(const CrispSet& a) {
    std::vector<double> out(a.membership().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.at(k) ? 1.0 : 0.0;
    return FuzzySet(a.grid(), std::move(out));
}

FuzzySet fuzzy_not(const FuzzySet& a) {
    std::vector<double> out(a.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = 1.0 - a[k];
    return FuzzySet(a.grid(), std::move(out));
}

FuzzySet fuzzy_and(const FuzzySet& a, const FuzzySet& b, FuzzyNorm norm) {
    require_same_grid(a.grid(), b.grid());
    std::vector<double> out(a.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = norm == FuzzyNorm::Product ? a[k] * b[k] : std::min(a[k], b[k]);
    }
    return FuzzySet(a.grid(), std::move(out));
}

FuzzySet fuzzy_or(const FuzzySet& a, const FuzzySet& b, FuzzyNorm norm) {
    require_same_grid(a.grid(), b.grid());
    std::vector<double> out(a.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (norm == FuzzyNorm::Product) {
            // a+b-ab never exceeds 1 mathematically; rounding of the three-term
            // expression can, by one ulp, so trim that excursion.
            const double v = a[k] + b[k] - a[k] * b[k];
            out[k] = v > 1.0 ? 1.0 : v;
        } else {
            out[k] = std::max(a[k], b[k]);
        }
    }
    return FuzzySet(a.grid(), std::move(out));
}

StandardizedFuzzySet::StandardizedFuzzySet(GridSpec grid, std::vector<double> p)
    : grid_(grid), p_(std::move(p)) {
    if (p_.size() != static_cast<std::size_t>(grid_.cell_count())) {
        throw DomainError("standardized set needs " + std::to_string(grid_.cell_count()) +
                          " cells, got " + std::to_string(p_.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < p_.size(); ++k) {
        if (!(p_[k] >= 0.0)) {
            throw DomainError("probability " + std::to_string(p_[k]) + " at flat index " +
                              std::to_string(k + 1) + " is negative");
        }
        sum += p_[k];
    }
    if (std::abs(sum - 1.0) > kNormEps) {
        throw DomainError("probabilities sum to " + std::to_string(sum) + ", expected 1");
    }
}

double StandardizedFuzzySet::at(Dot d) const { return p_[offset_of(d, grid_)]; }

StandardizedFuzzySet standardize(const FuzzySet& a) {
    const double mass = a.total_mass();
    if (mass <= 0.0) {
        throw DomainError("degenerate set: total mass is zero, no probability "
                          "interpretation exists");
    }
    std::vector<double> p(a.values().size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = a[k] / mass;
    return StandardizedFuzzySet(a.grid(), std::move(p));
}

double likelihood(const StandardizedFuzzySet& p1, const StandardizedFuzzySet& p2) {
    require_same_grid(p1.grid(), p2.grid());
    double h = 0.0;
    for (std::size_t k = 0; k < p1.probabilities().size(); ++k) {
        h += std::sqrt(p1[k] * p2[k]);
    }
    return h;
}

} // namespace quset
