#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frieze {

// Row-major 8-bit grayscale raster. Row 0 is the top of the strip.
struct Image {
    int width = 0;
    int height = 0;
    int maxval = 255;
    std::vector<std::uint8_t> pixels;
    // Header comments carried through PGM I/O (without the leading '#').
    std::vector<std::string> comments;

    Image() = default;
    Image(int w, int h, std::uint8_t fill = 255);

    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    friend bool operator==(const Image&, const Image&) = default;
};

// Binary PGM (P5, maxval <= 255, exactly one image). Throws MalformedPgm.
Image read_pgm(std::span<const std::uint8_t> bytes);
Image read_pgm_file(const std::string& path);

// Canonical P5: "P5\n", one "# ..." line per comment, "W H\n", "maxval\n", raster.
std::vector<std::uint8_t> write_pgm(const Image& img);
void write_pgm_file(const Image& img, const std::string& path);

}  // namespace frieze
