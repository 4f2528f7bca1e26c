#pragma once

#include <cstdint>
#include <vector>

#include "quset/lattice.hpp"

namespace quset {

// Connective pair selector: Product is a.b / a+b-ab, MinMax is min / max.
enum class FuzzyNorm { Product, MinMax };

// Black-and-white image: a plain subset of the lattice.
class CrispSet {
  public:
    explicit CrispSet(GridSpec grid); // empty set
    CrispSet(GridSpec grid, std::vector<std::uint8_t> membership);

    static CrispSet full(GridSpec grid);

    const GridSpec& grid() const { return grid_; }
    bool contains(Dot d) const;
    void insert(Dot d);
    void erase(Dot d);
    bool at(std::size_t offset) const { return membership_[offset] != 0; }
    const std::vector<std::uint8_t>& membership() const { return membership_; }

    friend bool operator==(const CrispSet& a, const CrispSet& b) {
        return a.grid_ == b.grid_ && a.membership_ == b.membership_;
    }

  private:
    GridSpec grid_;
    std::vector<std::uint8_t> membership_; // 0 or 1 per cell
};

CrispSet crisp_not(const CrispSet& a);
CrispSet crisp_and(const CrispSet& a, const CrispSet& b);
CrispSet crisp_or(const CrispSet& a, const CrispSet& b);

// Gray-scale image: adequacy value in [0, 1] per cell.
class FuzzySet {
  public:
    FuzzySet(GridSpec grid, std::vector<double> values);

    static FuzzySet constant(GridSpec grid, double value);

    const GridSpec& grid() const { return grid_; }
    double at(Dot d) const;
    double operator[](std::size_t offset) const { return values_[offset]; }
    const std::vector<double>& values() const { return values_; }

    // Sum over all cells in flat-index order.
    double total_mass() const;

  private:
    GridSpec grid_;
    std::vector<double> values_;
};

FuzzySet crisp_to_fuzzy(const CrispSet& a);
FuzzySet fuzzy_not(const FuzzySet& a);
FuzzySet fuzzy_and(const FuzzySet& a, const FuzzySet& b, FuzzyNorm norm = FuzzyNorm::Product);
FuzzySet fuzzy_or(const FuzzySet& a, const FuzzySet& b, FuzzyNorm norm = FuzzyNorm::Product);

// Fuzzy set whose values sum to 1: a probability distribution over cells.
class StandardizedFuzzySet {
  public:
    // Validates nonnegativity and unit sum (within kNormEps).
    StandardizedFuzzySet(GridSpec grid, std::vector<double> p);

    const GridSpec& grid() const { return grid_; }
    double at(Dot d) const;
    double operator[](std::size_t offset) const { return p_[offset]; }
    const std::vector<double>& probabilities() const { return p_; }

  private:
    GridSpec grid_;
    std::vector<double> p_;
};

// Scales by the total mass so values sum to 1. Throws DomainError on an
// all-zero set (no probability interpretation exists).
StandardizedFuzzySet standardize(const FuzzySet& a);

// Likelihood H(p1, p2) = sum_x sqrt(p1[x] * p2[x]); in [0, 1], and 1 only for
// equal distributions.
double likelihood(const StandardizedFuzzySet& p1, const StandardizedFuzzySet& p2);

} // namespace quset
