#include "quset/registers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "quset/error.hpp"
#include "quset/tolerances.hpp"

namespace quset {

namespace {

// First offset whose cumulative value is >= u: a tie at a boundary value
// resolves to the lower flat index. Cells with zero probability are never
// returned, even when u lands exactly on their (zero-width) interval.
std::size_t pick_offset(const std::vector<double>& probabilities,
                        const std::vector<double>& cumulative, double u) {
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it; // u beyond the last entry by rounding
    std::size_t offset = static_cast<std::size_t>(it - cumulative.begin());
    if (probabilities[offset] > 0.0) return offset;
    for (std::size_t k = offset + 1; k < probabilities.size(); ++k) {
        if (probabilities[k] > 0.0) return k;
    }
    while (offset > 0 && probabilities[offset] == 0.0) --offset;
    return offset;
}

std::vector<double> cumulative_of(const std::vector<double>& p) {
    std::vector<double> cumulative(p.size());
    double running = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        running += p[k];
        cumulative[k] = running;
    }
    return cumulative;
}

} // namespace

StochasticRegister::StochasticRegister(StandardizedFuzzySet distribution, std::uint64_t seed)
    : distribution_(std::move(distribution)),
      rng_(seed),
      cumulative_(cumulative_of(distribution_.probabilities())) {
    if (std::abs(cumulative_.back() - 1.0) > kNormEps) {
        throw DomainError("cumulative table ends at " + std::to_string(cumulative_.back()) +
                          ", expected 1");
    }
}

Dot StochasticRegister::sample() {
    return dot_at_offset(pick_offset(distribution_.probabilities(), cumulative_, rng_.uniform01()),
                         distribution_.grid());
}

FuzzySet StochasticRegister::empirical_distribution(std::uint64_t draws) {
    if (draws == 0) {
        throw DomainError("empirical distribution needs at least one draw");
    }
    std::vector<std::uint64_t> counts(cumulative_.size(), 0);
    for (std::uint64_t t = 0; t < draws; ++t) {
        ++counts[pick_offset(distribution_.probabilities(), cumulative_, rng_.uniform01())];
    }
    std::vector<double> freq(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        freq[k] = static_cast<double>(counts[k]) / static_cast<double>(draws);
    }
    return FuzzySet(distribution_.grid(), std::move(freq));
}

QuantumRegister::QuantumRegister(QuSet initial, std::uint64_t seed)
    : state_(std::move(initial)), rng_(seed) {}

void QuantumRegister::prepare(const QuSet& q) {
    if (!(q.grid() == state_.grid())) {
        throw DomainError("grid mismatch: prepared state has side " +
                          std::to_string(q.grid().side) + ", register has side " +
                          std::to_string(state_.grid().side));
    }
    state_ = q;
}

Dot QuantumRegister::measure() {
    std::vector<double> p(state_.amplitudes().size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(state_[k]);
    const std::size_t offset = pick_offset(p, cumulative_of(p), rng_.uniform01());
    ++access_count_;
    state_ = QuSet::basis(state_.grid(), FlatIndex{static_cast<int>(offset) + 1});
    return dot_at_offset(offset, state_.grid());
}

bool QuantumRegister::masked_measure(const QuSet& mask) {
    if (!(mask.grid() == state_.grid())) {
        throw DomainError("grid mismatch: mask has side " + std::to_string(mask.grid().side) +
                          ", register has side " + std::to_string(state_.grid().side));
    }
    const Amplitude component = inner(state_, mask);
    const double success_probability = std::norm(component);
    const bool success = rng_.uniform01() < success_probability;
    ++access_count_;
    if (success) {
        state_ = mask;
        return true;
    }
    // Projection postulate: remove the mask component and renormalize.
    std::vector<Amplitude> residual(state_.amplitudes().size());
    double residual_norm2 = 0.0;
    for (std::size_t k = 0; k < residual.size(); ++k) {
        residual[k] = state_[k] - component * mask[k];
        residual_norm2 += std::norm(residual[k]);
    }
    if (residual_norm2 <= 0.0) {
        throw InternalError("masked readout failed with zero orthogonal residual; "
                            "success probability 1 excludes this branch");
    }
    const double inv = 1.0 / std::sqrt(residual_norm2);
    for (auto& a : residual) a *= inv;
    state_ = QuSet(state_.grid(), std::move(residual));
    return false;
}

OverlapEstimate estimate_overlap(const QuSet& q, const QuSet& mask,
                                 std::uint64_t trials, std::uint64_t seed) {
    return estimate_overlap(q, mask, trials, seed, 1);
}

OverlapEstimate estimate_overlap(const QuSet& q, const QuSet& mask,
                                 std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers) {
    if (trials == 0) {
        throw DomainError("overlap estimation needs at least one trial");
    }
    if (workers == 0) {
        throw DomainError("overlap estimation needs at least one worker");
    }
    if (workers > trials) workers = static_cast<unsigned>(trials);

    auto run_batch = [&](std::uint64_t batch, std::uint64_t worker_seed) {
        QuantumRegister reg(q, worker_seed);
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < batch; ++t) {
            reg.prepare(q);
            if (reg.masked_measure(mask)) ++hits;
        }
        return hits;
    };

    std::vector<std::uint64_t> hits(workers, 0);
    if (workers == 1) {
        hits[0] = run_batch(trials, seed);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t batch = trials / workers + (w < trials % workers ? 1 : 0);
            pool.emplace_back([&hits, run_batch, batch, seed, w] {
                hits[w] = run_batch(batch, seed + w);
            });
        }
        for (auto& t : pool) t.join();
    }

    OverlapEstimate e;
    e.trials = trials;
    for (std::uint64_t h : hits) e.successes += h;
    e.p_hat = static_cast<double>(e.successes) / static_cast<double>(trials);
    e.h_abs_hat = std::sqrt(e.p_hat);
    e.std_err_p = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    return e;
}

} // namespace quset
