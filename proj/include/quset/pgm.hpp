#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "quset/fuzzy.hpp"

namespace quset {

// A parsed PGM image. Pixels are row-major, each in [0 .. maxval].
struct ImageDocument {
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::vector<int> pixels;
};

// Parses PGM P2 (ASCII) or P5 (binary; 8-bit, or 16-bit big-endian when
// maxval > 255). Comments (#) are skipped. Throws ParseError with the byte
// offset on malformed headers, truncated data, or maxval 0.
ImageDocument read_pgm(const std::filesystem::path& path);
ImageDocument parse_pgm(const std::string& bytes);

// Writes ASCII P2, one image row per line.
void write_pgm(const std::filesystem::path& path, const ImageDocument& img);
std::string render_pgm(const ImageDocument& img);

// Gray levels to adequacy: F = pixel/maxval, or 1 - pixel/maxval when invert
// (black ink on a white sheet). The image must be square.
FuzzySet image_to_fuzzy(const ImageDocument& img, bool invert);

// Same, zero-padding the adequacy array into a target_side x target_side grid
// (padding is applied after inversion, so padded cells carry no ink).
FuzzySet image_to_fuzzy(const ImageDocument& img, bool invert, int target_side);

// Adequacy back to gray levels: pixel = round(F * maxval).
ImageDocument fuzzy_to_image(const FuzzySet& f, int maxval = 255);

} // namespace quset
