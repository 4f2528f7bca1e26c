#include "quset/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quset/error.hpp"

namespace quset {

namespace {

// Gram-Schmidt candidate rejection threshold: a residual shorter than this is
// treated as linearly dependent and the candidate is skipped.
constexpr double kResidualFloor = 1e-6;

void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) {
        throw DomainError("grid mismatch: side " + std::to_string(a.side) +
                          " vs side " + std::to_string(b.side));
    }
}

} // namespace

QuMap::QuMap(GridSpec grid)
    : grid_(grid),
      dim_(static_cast<std::size_t>(grid.cell_count())),
      entries_(dim_ * dim_, Amplitude{0.0, 0.0}) {}

QuMap::QuMap(GridSpec grid, std::vector<Amplitude> entries)
    : grid_(grid), dim_(static_cast<std::size_t>(grid.cell_count())), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw DomainError("map needs " + std::to_string(dim_ * dim_) + " entries, got " +
                          std::to_string(entries_.size()));
    }
}

QuMap QuMap::identity(GridSpec grid) {
    QuMap m(grid);
    for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = Amplitude{1.0, 0.0};
    return m;
}

QuMap operator+(const QuMap& a, const QuMap& b) {
    require_same_grid(a.grid_, b.grid_);
    QuMap out(a.grid_);
    for (std::size_t k = 0; k < out.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    }
    return out;
}

QuMap operator-(const QuMap& a, const QuMap& b) {
    require_same_grid(a.grid_, b.grid_);
    QuMap out(a.grid_);
    for (std::size_t k = 0; k < out.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    }
    return out;
}

QuMap operator*(double scale, const QuMap& a) {
    QuMap out(a.grid_);
    for (std::size_t k = 0; k < out.entries_.size(); ++k) {
        out.entries_[k] = scale * a.entries_[k];
    }
    return out;
}

std::vector<Amplitude> apply(const QuMap& map, std::span<const Amplitude> in) {
    if (in.size() != map.dim()) {
        throw DomainError("map of dimension " + std::to_string(map.dim()) +
                          " applied to vector of length " + std::to_string(in.size()));
    }
    std::vector<Amplitude> out(map.dim(), Amplitude{0.0, 0.0});
    for (std::size_t row = 0; row < map.dim(); ++row) {
        Amplitude sum{0.0, 0.0};
        for (std::size_t col = 0; col < map.dim(); ++col) {
            sum += map.at(row, col) * in[col];
        }
        out[row] = sum;
    }
    return out;
}

std::vector<Amplitude> apply(const QuMap& map, const QuSet& q) {
    require_same_grid(map.grid(), q.grid());
    return apply(map, std::span<const Amplitude>(q.amplitudes()));
}

QuMap compose(const QuMap& a, const QuMap& b) {
    require_same_grid(a.grid(), b.grid());
    QuMap out(a.grid());
    const std::size_t m = a.dim();
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t mid = 0; mid < m; ++mid) {
            const Amplitude scale = a.at(row, mid);
            if (scale == Amplitude{0.0, 0.0}) continue;
            for (std::size_t col = 0; col < m; ++col) {
                out.at(row, col) += scale * b.at(mid, col);
            }
        }
    }
    return out;
}

QuMap adjoint(const QuMap& a) {
    QuMap out(a.grid());
    for (std::size_t row = 0; row < a.dim(); ++row) {
        for (std::size_t col = 0; col < a.dim(); ++col) {
            out.at(col, row) = std::conj(a.at(row, col));
        }
    }
    return out;
}

Amplitude trace(const QuMap& a) {
    Amplitude t{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

double max_abs_entry(const QuMap& a) {
    double m = 0.0;
    for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

double max_abs_diff(const QuMap& a, const QuMap& b) {
    require_same_grid(a.grid(), b.grid());
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

bool is_projector(const QuMap& p, double tol) {
    if (max_abs_diff(p, adjoint(p)) > tol) return false;
    return max_abs_diff(compose(p, p), p) <= tol;
}

Projector::Projector(QuMap matrix, double tol) : matrix_(std::move(matrix)) {
    if (max_abs_diff(matrix_, adjoint(matrix_)) > tol) {
        throw DomainError("projector must be Hermitian");
    }
    if (max_abs_diff(compose(matrix_, matrix_), matrix_) > tol) {
        throw DomainError("projector must be idempotent");
    }
}

Projector projector_from_quset(const QuSet& q) {
    QuMap p(q.grid());
    for (std::size_t row = 0; row < p.dim(); ++row) {
        for (std::size_t col = 0; col < p.dim(); ++col) {
            p.at(row, col) = q[row] * std::conj(q[col]);
        }
    }
    return Projector(std::move(p));
}

QuMap logic_not(const QuMap& p) { return QuMap::identity(p.grid()) - p; }

QuMap logic_and(const QuMap& p, const QuMap& r) { return compose(p, r); }

QuMap logic_or(const QuMap& p, const QuMap& r) { return p + r - compose(p, r); }

QuMap commutator(const QuMap& p, const QuMap& r) {
    return compose(p, r) - compose(r, p);
}

OrthogonalFamily OrthogonalFamily::from_projectors(std::vector<Projector> projectors,
                                                   double tol) {
    if (projectors.empty()) {
        throw DomainError("orthogonal family needs at least one projector");
    }
    const GridSpec grid = projectors.front().grid();
    for (const auto& p : projectors) require_same_grid(grid, p.grid());
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            const double residue =
                max_abs_entry(compose(projectors[i].matrix(), projectors[j].matrix()));
            if (residue > tol) {
                throw DomainError("projectors " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " are not orthogonal (product "
                                  "max-entry " + std::to_string(residue) + ")");
            }
        }
    }
    return OrthogonalFamily(grid, std::move(projectors), {});
}

OrthogonalFamily family_from_orthonormal(const std::vector<QuSet>& states) {
    if (states.empty()) {
        throw DomainError("orthogonal family needs at least one state");
    }
    const GridSpec grid = states.front().grid();
    for (const auto& q : states) require_same_grid(grid, q.grid());
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const double overlap = std::abs(inner(states[i], states[j]));
            if (overlap > kOpEps) {
                throw DomainError("states " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " are not orthogonal (overlap " +
                                  std::to_string(overlap) + ")");
            }
        }
    }
    std::vector<Projector> projectors;
    projectors.reserve(states.size());
    for (const auto& q : states) projectors.push_back(projector_from_quset(q));
    return OrthogonalFamily(grid, std::move(projectors), states);
}

Projector project_set(const OrthogonalFamily& family, const std::vector<int>& subset) {
    std::vector<int> members(subset);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    QuMap sum(family.grid());
    for (int member : members) {
        if (member < 1 || static_cast<std::size_t>(member) > family.size()) {
            throw DomainError("subset member " + std::to_string(member) +
                              " outside family of size " + std::to_string(family.size()));
        }
        sum = sum + family[static_cast<std::size_t>(member) - 1].matrix();
    }
    return Projector(std::move(sum));
}

QuMap diagonalize_family(const OrthogonalFamily& family) {
    if (!family.rank_one_constructed()) {
        throw DomainError("unsupported family: diagonalization needs a family built "
                          "from state vectors");
    }
    const GridSpec grid = family.grid();
    const std::size_t m = static_cast<std::size_t>(grid.cell_count());
    if (family.size() > m) {
        throw DomainError("family of " + std::to_string(family.size()) +
                          " states exceeds dimension " + std::to_string(m));
    }

    std::vector<std::vector<Amplitude>> basis;
    basis.reserve(m);
    for (const auto& q : family.states()) basis.push_back(q.amplitudes());

    // Complete with standard basis vectors, skipping near-dependent candidates.
    for (std::size_t candidate = 0; candidate < m && basis.size() < m; ++candidate) {
        std::vector<Amplitude> v(m, Amplitude{0.0, 0.0});
        v[candidate] = Amplitude{1.0, 0.0};
        for (const auto& b : basis) {
            Amplitude coefficient{0.0, 0.0};
            for (std::size_t k = 0; k < m; ++k) coefficient += std::conj(b[k]) * v[k];
            for (std::size_t k = 0; k < m; ++k) v[k] -= coefficient * b[k];
        }
        double norm2 = 0.0;
        for (const auto& a : v) norm2 += std::norm(a);
        const double norm = std::sqrt(norm2);
        if (norm < kResidualFloor) continue;
        for (auto& a : v) a /= norm;
        basis.push_back(std::move(v));
    }
    if (basis.size() < m) {
        throw InternalError("basis completion stalled at " + std::to_string(basis.size()) +
                            " of " + std::to_string(m) + " vectors");
    }

    // Row i of U is conj(basis_i), so U maps q_i to the i-th standard vector.
    QuMap u(grid);
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
            u.at(row, col) = std::conj(basis[row][col]);
        }
    }
    return u;
}

MixedState mixed_state(std::vector<double> weights, OrthogonalFamily family) {
    if (weights.size() != family.size()) {
        throw DomainError("got " + std::to_string(weights.size()) + " weights for a family "
                          "of " + std::to_string(family.size()) + " projectors");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw DomainError("mixed-state weight " + std::to_string(w) + " is negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kNormEps) {
        throw DomainError("mixed-state weights sum to " + std::to_string(sum) +
                          ", expected 1");
    }
    QuMap density(family.grid());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        density = density + weights[i] * family[i].matrix();
    }
    return MixedState{std::move(weights), std::move(family), std::move(density)};
}

QuMap diagonal_operator(const FuzzySet& a) {
    QuMap d(a.grid());
    for (std::size_t i = 0; i < d.dim(); ++i) d.at(i, i) = Amplitude{a[i], 0.0};
    return d;
}

} // namespace quset
