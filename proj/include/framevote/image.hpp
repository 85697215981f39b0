#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace framevote {

// 8-bit grayscale image, row-major. value(i, j) is the intensity of row i,
// column j.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t value(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(col)];
    }
    std::uint8_t& value(int row, int col) {
        return pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(col)];
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

GrayImage make_image(int width, int height, std::uint8_t fill = 0);

// Binary PGM (P5), maxval 255. Header comment lines (#) are accepted on
// read; anything else is rejected as unsupported.
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

// Mean filter over a (2*radius+1)^2 window clamped at the borders.
// radius 0 returns the input unchanged.
GrayImage box_blur(const GrayImage& img, int radius);

}  // namespace framevote
