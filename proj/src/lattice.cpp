#include "quset/lattice.hpp"

#include <string>

#include "quset/error.hpp"

namespace quset {

namespace {

// Largest side whose cell count still fits an int.
constexpr int kMaxSide = 46340;

} // namespace

GridSpec GridSpec::of_side(int side) {
    if (side < 1 || side > kMaxSide) {
        throw DomainError("grid side must be in [1 .. " + std::to_string(kMaxSide) +
                          "], got " + std::to_string(side));
    }
    return GridSpec{side, 0};
}

GridSpec GridSpec::of_qubits(int bits_per_axis) {
    if (bits_per_axis < 0 || bits_per_axis > 15) {
        throw DomainError("bits per axis must be in [0 .. 15], got " +
                          std::to_string(bits_per_axis));
    }
    return GridSpec{1 << bits_per_axis, bits_per_axis};
}

FlatIndex flatten(Dot d, const GridSpec& g) {
    if (d.i < 1 || d.i > g.side || d.j < 1 || d.j > g.side) {
        throw DomainError("dot (" + std::to_string(d.i) + "," + std::to_string(d.j) +
                          ") outside grid of side " + std::to_string(g.side));
    }
    return FlatIndex{(d.i - 1) * g.side + d.j};
}

Dot unflatten(FlatIndex k, const GridSpec& g) {
    if (k.value < 1 || k.value > g.cell_count()) {
        throw DomainError("flat index " + std::to_string(k.value) +
                          " outside [1 .. " + std::to_string(g.cell_count()) + "]");
    }
    const int zero_based = k.value - 1;
    return Dot{zero_based / g.side + 1, zero_based % g.side + 1};
}

std::size_t offset_of(Dot d, const GridSpec& g) {
    return offset_of(flatten(d, g));
}

Dot dot_at_offset(std::size_t offset, const GridSpec& g) {
    return unflatten(FlatIndex{static_cast<int>(offset) + 1}, g);
}

} // namespace quset
