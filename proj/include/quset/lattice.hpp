#pragma once

#include <cstddef>

namespace quset {

// An N x N lattice of cells, flattened to M = N^2 entries in row-major order.
// External indices (Dot, FlatIndex) are 1-based; array offsets are 0-based.
struct GridSpec {
    int side = 1;          // N: cells per axis
    int bits_per_axis = 0; // n: qubit count per axis; 0 when not qubit-derived

    // Any side >= 1 is accepted; the qubit-count reading (side = 2^n) is
    // metadata and only enforced by of_qubits().
    static GridSpec of_side(int side);
    static GridSpec of_qubits(int bits_per_axis);

    int cell_count() const { return side * side; } // M

    // Grids are interchangeable iff they index the same array shape.
    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.side == b.side;
    }
};

// One lattice point, 1 <= i, j <= N.
struct Dot {
    int i = 1;
    int j = 1;

    friend bool operator==(Dot a, Dot b) { return a.i == b.i && a.j == b.j; }
};

// 1-based position in the flattened array, 1 <= value <= M.
struct FlatIndex {
    int value = 1;

    friend bool operator==(FlatIndex a, FlatIndex b) { return a.value == b.value; }
};

// K = (i-1)*N + j. Throws DomainError for dots outside the grid.
FlatIndex flatten(Dot d, const GridSpec& g);

// Inverse of flatten. Throws DomainError for indices outside [1 .. M].
Dot unflatten(FlatIndex k, const GridSpec& g);

// 0-based array offsets for internal storage.
std::size_t offset_of(Dot d, const GridSpec& g);
inline std::size_t offset_of(FlatIndex k) { return static_cast<std::size_t>(k.value) - 1; }
Dot dot_at_offset(std::size_t offset, const GridSpec& g);

} // namespace quset
