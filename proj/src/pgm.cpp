#include "quset/pgm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "quset/error.hpp"

namespace quset {

namespace {

// Cursor over the raw bytes; every error it raises carries the offset.
class PgmScanner {
  public:
    explicit PgmScanner(const std::string& bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }

    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int next_int(const char* what, long max_value) {
        skip_separators();
        if (at_end()) {
            throw ParseError(std::string("missing ") + what, pos_);
        }
        if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ParseError(std::string("expected ") + what + ", found '" +
                                 bytes_[pos_] + "'",
                             pos_);
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > max_value) {
                throw ParseError(std::string(what) + " exceeds " + std::to_string(max_value),
                                 pos_);
            }
            ++pos_;
        }
        return static_cast<int>(value);
    }

    // The single whitespace byte that separates a P5 header from raster data.
    void consume_raster_separator() {
        if (at_end() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ParseError("expected single whitespace before binary raster", pos_);
        }
        ++pos_;
    }

    unsigned char raw_byte() {
        if (at_end()) {
            throw ParseError("truncated raster data", pos_);
        }
        return static_cast<unsigned char>(bytes_[pos_++]);
    }

  private:
    const std::string& bytes_;
    std::size_t pos_ = 0;
};

} // namespace

ImageDocument parse_pgm(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw ParseError("not a PNM file: missing 'P' magic", 0);
    }
    const char kind = bytes[1];
    if (kind != '2' && kind != '5') {
        throw ParseError(std::string("unsupported format P") + kind +
                             ", only gray-scale P2/P5 are read",
                         1);
    }
    PgmScanner header(bytes);
    header.raw_byte(); // 'P'
    header.raw_byte(); // format digit

    ImageDocument img;
    img.width = header.next_int("width", 1 << 20);
    img.height = header.next_int("height", 1 << 20);
    if (img.width < 1 || img.height < 1) {
        throw ParseError("image dimensions must be positive", header.offset());
    }
    const std::size_t maxval_offset = header.offset();
    img.maxval = header.next_int("maxval", 65535);
    if (img.maxval < 1) {
        throw ParseError("maxval must be positive", maxval_offset);
    }

    const std::size_t count =
        static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
    img.pixels.resize(count);

    if (kind == '2') {
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t at = header.offset();
            const int v = header.next_int("pixel value", 65535);
            if (v > img.maxval) {
                throw ParseError("pixel value " + std::to_string(v) + " exceeds maxval " +
                                     std::to_string(img.maxval),
                                 at);
            }
            img.pixels[k] = v;
        }
    } else {
        header.consume_raster_separator();
        const bool wide = img.maxval > 255;
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t at = header.offset();
            int v = header.raw_byte();
            if (wide) {
                v = (v << 8) | header.raw_byte(); // big-endian, high byte first
            }
            if (v > img.maxval) {
                throw ParseError("pixel value " + std::to_string(v) + " exceeds maxval " +
                                     std::to_string(img.maxval),
                                 at);
            }
            img.pixels[k] = v;
        }
    }
    return img;
}

ImageDocument read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_pgm(buffer.str());
}

std::string render_pgm(const ImageDocument& img) {
    std::ostringstream out;
    out << "P2\n" << img.width << " " << img.height << "\n" << img.maxval << "\n";
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            if (col > 0) out << ' ';
            out << img.pixels[static_cast<std::size_t>(row) * img.width + col];
        }
        out << '\n';
    }
    return out.str();
}

void write_pgm(const std::filesystem::path& path, const ImageDocument& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write '" + path.string() + "'");
    }
    out << render_pgm(img);
}

FuzzySet image_to_fuzzy(const ImageDocument& img, bool invert) {
    if (img.width != img.height) {
        throw DomainError("image is " + std::to_string(img.width) + "x" +
                          std::to_string(img.height) + ", expected square (use padding)");
    }
    return image_to_fuzzy(img, invert, img.width);
}

FuzzySet image_to_fuzzy(const ImageDocument& img, bool invert, int target_side) {
    if (target_side < img.width || target_side < img.height) {
        throw DomainError("target side " + std::to_string(target_side) +
                          " smaller than image " + std::to_string(img.width) + "x" +
                          std::to_string(img.height));
    }
    const GridSpec grid = GridSpec::of_side(target_side);
    std::vector<double> values(static_cast<std::size_t>(grid.cell_count()), 0.0);
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            const double level =
                static_cast<double>(img.pixels[static_cast<std::size_t>(row) * img.width + col]) /
                static_cast<double>(img.maxval);
            values[static_cast<std::size_t>(row) * target_side + col] =
                invert ? 1.0 - level : level;
        }
    }
    return FuzzySet(grid, std::move(values));
}

ImageDocument fuzzy_to_image(const FuzzySet& f, int maxval) {
    if (maxval < 1 || maxval > 65535) {
        throw DomainError("maxval must be in [1 .. 65535], got " + std::to_string(maxval));
    }
    ImageDocument img;
    img.width = f.grid().side;
    img.height = f.grid().side;
    img.maxval = maxval;
    img.pixels.resize(f.values().size());
    for (std::size_t k = 0; k < img.pixels.size(); ++k) {
        img.pixels[k] = static_cast<int>(std::llround(f[k] * maxval));
    }
    return img;
}

} // namespace quset
