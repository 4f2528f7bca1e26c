#pragma once

#include <complex>
#include <vector>

#include "quset/fuzzy.hpp"
#include "quset/lattice.hpp"

namespace quset {

using Amplitude = std::complex<double>;

// Quantum set: one complex amplitude per cell with unit Hermitian norm,
// sum_x |q[x]|^2 = 1. The state of a 2n-qubit register over the lattice.
class QuSet {
  public:
    // Validates the unit-norm invariant (within kNormEps); amplitudes are
    // summed in flat-index order.
    QuSet(GridSpec grid, std::vector<Amplitude> amplitudes);

    static QuSet basis(GridSpec grid, FlatIndex k);
    static QuSet basis(GridSpec grid, Dot d);

    const GridSpec& grid() const { return grid_; }
    Amplitude at(Dot d) const { return amp_[offset_of(d, grid_)]; }
    Amplitude operator[](std::size_t offset) const { return amp_[offset]; }
    const std::vector<Amplitude>& amplitudes() const { return amp_; }

  private:
    GridSpec grid_;
    std::vector<Amplitude> amp_;
};

// Scales a raw vector to unit Hermitian norm. Throws DomainError on the zero
// vector (degenerate state).
QuSet normalize(GridSpec grid, std::vector<Amplitude> raw);

// The square-root embedding q[x] = sqrt(p[x]): unit norm holds automatically
// because the probabilities sum to 1.
QuSet from_fuzzy_sqrt(const StandardizedFuzzySet& p);

// p[x] = |q[x]|^2; the standardized fuzzy set a quantum set carries.
StandardizedFuzzySet probabilities(const QuSet& q);

// Scalar product H = sum_K q[K] * conj(q'[K]); the second argument is
// conjugated. |H| <= 1 and H(q, q) = 1.
Amplitude inner(const QuSet& q, const QuSet& q_prime);

// |H(q, q')|^2: the success probability of a masked readout.
double overlap_probability(const QuSet& q, const QuSet& q_prime);

} // namespace quset
