#include "asymlab/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace asymlab {

void Image::clamp() {
    for (double& p : pixels) p = std::min(1.0, std::max(0.0, p));
}

std::uint64_t Image::content_hash() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto feed = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xFF;
            h *= 0x100000001B3ULL;
        }
    };
    feed(height);
    feed(width);
    for (double p : pixels) {
        std::uint64_t bits;
        std::memcpy(&bits, &p, sizeof bits);
        feed(bits);
    }
    return h;
}

namespace {

double sample_bilinear(const Image& src, std::size_t c, double sy, double sx) {
    const double max_y = static_cast<double>(src.height - 1);
    const double max_x = static_cast<double>(src.width - 1);
    sy = std::min(max_y, std::max(0.0, sy));
    sx = std::min(max_x, std::max(0.0, sx));
    const std::size_t y0 = static_cast<std::size_t>(sy);
    const std::size_t x0 = static_cast<std::size_t>(sx);
    const std::size_t y1 = std::min(y0 + 1, src.height - 1);
    const std::size_t x1 = std::min(x0 + 1, src.width - 1);
    const double fy = sy - static_cast<double>(y0);
    const double fx = sx - static_cast<double>(x0);
    const double top = src.at(c, y0, x0) * (1.0 - fx) + src.at(c, y0, x1) * fx;
    const double bot = src.at(c, y1, x0) * (1.0 - fx) + src.at(c, y1, x1) * fx;
    return top * (1.0 - fy) + bot * fy;
}

double sample_nearest(const Image& src, std::size_t c, double sy, double sx) {
    const long ny = std::lround(sy);
    const long nx = std::lround(sx);
    const std::size_t y = static_cast<std::size_t>(
        std::min<long>(static_cast<long>(src.height) - 1, std::max<long>(0, ny)));
    const std::size_t x = static_cast<std::size_t>(
        std::min<long>(static_cast<long>(src.width) - 1, std::max<long>(0, nx)));
    return src.at(c, y, x);
}

}  // namespace

Image resample_region(const Image& src, double x0, double y0, double w, double h,
                      std::size_t out_h, std::size_t out_w, Resample mode) {
    Image out(out_h, out_w);
    const double sx_scale = w / static_cast<double>(out_w);
    const double sy_scale = h / static_cast<double>(out_h);
    for (std::size_t c = 0; c < Image::kChannels; ++c) {
        for (std::size_t oy = 0; oy < out_h; ++oy) {
            // Pixel-center mapping: out center (oy+0.5) lands at source
            // coordinate y0 + (oy+0.5)*scale, expressed on the pixel grid.
            const double sy = y0 + (static_cast<double>(oy) + 0.5) * sy_scale - 0.5;
            for (std::size_t ox = 0; ox < out_w; ++ox) {
                const double sx = x0 + (static_cast<double>(ox) + 0.5) * sx_scale - 0.5;
                out.at(c, oy, ox) = (mode == Resample::Bilinear)
                                        ? sample_bilinear(src, c, sy, sx)
                                        : sample_nearest(src, c, sy, sx);
            }
        }
    }
    return out;
}

Image resize(const Image& src, std::size_t out_h, std::size_t out_w, Resample mode) {
    return resample_region(src, 0.0, 0.0, static_cast<double>(src.width),
                           static_cast<double>(src.height), out_h, out_w, mode);
}

}  // namespace asymlab
