#pragma once

#include <cstddef>
#include <vector>

namespace asymlab {

/// Planar RGB image with pixel values in [0,1]. Layout: channel-major,
/// row-major within a channel.
struct Image {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> pixels;  // 3 * height * width

    static constexpr std::size_t kChannels = 3;

    Image() = default;
    Image(std::size_t h, std::size_t w) : height(h), width(w), pixels(kChannels * h * w, 0.0) {}

    double& at(std::size_t c, std::size_t y, std::size_t x) {
        return pixels[(c * height + y) * width + x];
    }
    double at(std::size_t c, std::size_t y, std::size_t x) const {
        return pixels[(c * height + y) * width + x];
    }

    std::size_t pixel_count() const { return height * width; }

    /// Clamps every pixel into [0,1].
    void clamp();

    /// Stable 64-bit content hash (bit patterns of all pixels).
    std::uint64_t content_hash() const;
};

enum class Resample { Bilinear, Nearest };

/// Samples the axis-aligned rectangle [x0, x0+w) x [y0, y0+h) of `src`
/// (continuous coordinates) onto an out_h x out_w grid. Border coordinates
/// clamp to the edge pixel.
Image resample_region(const Image& src, double x0, double y0, double w, double h,
                      std::size_t out_h, std::size_t out_w, Resample mode);

/// Whole-image resize.
Image resize(const Image& src, std::size_t out_h, std::size_t out_w, Resample mode);

}  // namespace asymlab
