#pragma once

#include <cstdint>
#include <vector>

#include "quset/fuzzy.hpp"
#include "quset/quset.hpp"
#include "quset/rng.hpp"

namespace quset {

// A register that on every access produces a dot x with probability p[x],
// realizing the statistical reading of a standardized fuzzy set. Draws are
// i.i.d.; sampling is inverse-CDF with binary search over a precomputed
// cumulative table, ties resolving to the lower flat index.
class StochasticRegister {
  public:
    StochasticRegister(StandardizedFuzzySet distribution, std::uint64_t seed);

    const StandardizedFuzzySet& distribution() const { return distribution_; }
    const std::vector<double>& cumulative() const { return cumulative_; }

    // One draw; advances the generator, never the distribution.
    Dot sample();

    // Frequencies t[v]/draws over `draws` samples. Throws DomainError when
    // draws == 0.
    FuzzySet empirical_distribution(std::uint64_t draws);

  private:
    StandardizedFuzzySet distribution_;
    Rng rng_;
    std::vector<double> cumulative_;
};

// A simulated quantum register over the lattice: holds a QuSet, supports
// preparation, collapsing measurement, and masked readout. Single-owner
// mutable object; run concurrent trial batches on independent instances.
class QuantumRegister {
  public:
    QuantumRegister(QuSet initial, std::uint64_t seed);

    const QuSet& state() const { return state_; }
    std::uint64_t access_count() const { return access_count_; }

    // Resets the register to q (preparation).
    void prepare(const QuSet& q);

    // Reads the register: returns dot x with probability |q[x]|^2 and
    // collapses the state to the basis vector at x (amplitude exactly 1).
    Dot measure();

    // Masked readout against mask q': succeeds with probability |H(q,q')|^2.
    // On success the state becomes the mask; on failure it becomes the
    // normalized component of the old state orthogonal to the mask. Either
    // way, re-prepare before an independent trial.
    bool masked_measure(const QuSet& mask);

  private:
    QuSet state_;
    Rng rng_;
    std::uint64_t access_count_ = 0;
};

// Monte Carlo estimate of a masked-readout success probability.
struct OverlapEstimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;     // successes / trials
    double h_abs_hat = 0.0; // sqrt(p_hat)
    double std_err_p = 0.0; // sqrt(p_hat * (1 - p_hat) / trials)
};

// Runs `trials` independent prepare(q) + masked_measure(mask) cycles.
// Deterministic for a given seed. Throws DomainError when trials == 0.
OverlapEstimate estimate_overlap(const QuSet& q, const QuSet& mask,
                                 std::uint64_t trials, std::uint64_t seed);

// Same estimate fanned across `workers` independently seeded registers
// (worker w uses seed + w); counts merge by summation, so the result is
// deterministic for a given (seed, workers) pair.
OverlapEstimate estimate_overlap(const QuSet& q, const QuSet& mask,
                                 std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers);

} // namespace quset
