#pragma once

#include <span>
#include <vector>

#include "quset/fuzzy.hpp"
#include "quset/quset.hpp"
#include "quset/tolerances.hpp"

namespace quset {

// Linear map on quantum sets: a dense M x M complex matrix, M = N^2.
class QuMap {
  public:
    explicit QuMap(GridSpec grid); // zero matrix
    QuMap(GridSpec grid, std::vector<Amplitude> entries);

    static QuMap identity(GridSpec grid);

    const GridSpec& grid() const { return grid_; }
    std::size_t dim() const { return dim_; }

    Amplitude& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Amplitude& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    const std::vector<Amplitude>& entries() const { return entries_; }

    friend QuMap operator+(const QuMap& a, const QuMap& b);
    friend QuMap operator-(const QuMap& a, const QuMap& b);
    friend QuMap operator*(double scale, const QuMap& a);

  private:
    GridSpec grid_;
    std::size_t dim_;
    std::vector<Amplitude> entries_; // row-major
};

// out[I] = sum_K L[I,K] * in[K]. The output is not renormalized; a general
// map need not preserve the unit norm.
std::vector<Amplitude> apply(const QuMap& map, std::span<const Amplitude> in);
std::vector<Amplitude> apply(const QuMap& map, const QuSet& q);

// Matrix product C = A.B: C[K,J] = sum_I A[K,I] * B[I,J].
QuMap compose(const QuMap& a, const QuMap& b);

QuMap adjoint(const QuMap& a);
Amplitude trace(const QuMap& a);
double max_abs_entry(const QuMap& a);

// Largest entry magnitude of a - b; the distance used by every matrix
// identity check.
double max_abs_diff(const QuMap& a, const QuMap& b);

// True iff P is idempotent (P.P = P) and Hermitian, both within tol.
bool is_projector(const QuMap& p, double tol = kOpEps);

// Hermitian idempotent operator. The constructor enforces both properties;
// non-Hermitian idempotents stay representable as plain QuMaps.
class Projector {
  public:
    explicit Projector(QuMap matrix, double tol = kOpEps);

    const QuMap& matrix() const { return matrix_; }
    const GridSpec& grid() const { return matrix_.grid(); }

  private:
    QuMap matrix_;
};

// Rank-1 projector P[I,J] = q[I] * conj(q[J]); trace 1.
Projector projector_from_quset(const QuSet& q);

// The operator logic connectives: not P = 1 - P, P and R = P.R,
// P or R = P + R - P.R. Closure under Projector holds only for commuting
// inputs, so results are returned as plain maps.
QuMap logic_not(const QuMap& p);
QuMap logic_and(const QuMap& p, const QuMap& r);
QuMap logic_or(const QuMap& p, const QuMap& r);

// P.R - R.P; zero exactly when the pair generates a Boolean algebra.
QuMap commutator(const QuMap& p, const QuMap& r);

// Projectors with pairwise products zero; the carrier of the Boolean algebra
// of sum-projectors. Families built from state vectors keep them for
// diagonalization.
class OrthogonalFamily {
  public:
    static OrthogonalFamily from_projectors(std::vector<Projector> projectors,
                                            double tol = kOpEps);

    std::size_t size() const { return projectors_.size(); }
    const Projector& operator[](std::size_t i) const { return projectors_[i]; }
    const GridSpec& grid() const { return grid_; }

    bool rank_one_constructed() const { return !states_.empty(); }
    const std::vector<QuSet>& states() const { return states_; }

  private:
    friend OrthogonalFamily family_from_orthonormal(const std::vector<QuSet>& states);

    OrthogonalFamily(GridSpec grid, std::vector<Projector> projectors,
                     std::vector<QuSet> states)
        : grid_(grid), projectors_(std::move(projectors)), states_(std::move(states)) {}

    GridSpec grid_;
    std::vector<Projector> projectors_;
    std::vector<QuSet> states_;
};

// Builds the family P_i = q_i^+ . q_i from pairwise orthogonal unit vectors.
// Throws DomainError naming the offending pair when two inputs overlap.
OrthogonalFamily family_from_orthonormal(const std::vector<QuSet>& states);

// Sum-projector P_(S) = sum_{I in S} P_I for a subset S of {1 .. k}
// (1-based member indices; duplicates collapse).
Projector project_set(const OrthogonalFamily& family, const std::vector<int>& subset);

// For a family built from orthonormal vectors q_1..q_k, returns the unitary U
// with U.P_i.U^-1 = diag(0,..,1,..,0) (single 1 at position i), built by
// completing q_1..q_k to an orthonormal basis over the standard candidates.
QuMap diagonalize_family(const OrthogonalFamily& family);

// Statistical operator R = sum_i w_i P_i over an orthogonal family.
struct MixedState {
    std::vector<double> weights;
    OrthogonalFamily family;
    QuMap density;
};

// Validates w_i >= 0 and sum w = 1 (within kNormEps).
MixedState mixed_state(std::vector<double> weights, OrthogonalFamily family);

// Diagonal matrix carrying a fuzzy set: D[I,I] = a[I]. Composition and the
// operator connectives on these reproduce product-norm fuzzy logic.
QuMap diagonal_operator(const FuzzySet& a);

} // namespace quset
