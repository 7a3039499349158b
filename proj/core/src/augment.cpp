#include "asymlab/augment.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "asymlab/errors.hpp"

namespace asymlab {

Image random_resized_crop(const Image& img, double scale_lo, double scale_hi, std::size_t out_h,
                          std::size_t out_w, RngStream& rng, Resample mode) {
    if (!(scale_lo > 0.0) || scale_lo > scale_hi)
        throw ConfigError("random_resized_crop: invalid scale range [" +
                          std::to_string(scale_lo) + ", " + std::to_string(scale_hi) + "]");
    if (out_h == 0 || out_w == 0) throw ConfigError("random_resized_crop: empty output size");

    const double src_w = static_cast<double>(img.width);
    const double src_h = static_cast<double>(img.height);
    const double aspect = static_cast<double>(out_w) / static_cast<double>(out_h);

    for (int attempt = 0; attempt < 10; ++attempt) {
        const double area = rng.next_uniform(scale_lo, scale_hi) * src_w * src_h;
        const double crop_w = std::sqrt(area * aspect);
        const double crop_h = crop_w / aspect;
        if (crop_w > src_w || crop_h > src_h) continue;
        const double x0 = rng.next_uniform(0.0, src_w - crop_w);
        const double y0 = rng.next_uniform(0.0, src_h - crop_h);
        return resample_region(img, x0, y0, crop_w, crop_h, out_h, out_w, mode);
    }

    std::cerr << "random_resized_crop: no aspect-correct crop fit after 10 attempts, "
                 "falling back to center crop\n";
    const double crop_w = std::min(src_w, src_h * aspect);
    const double crop_h = crop_w / aspect;
    return resample_region(img, (src_w - crop_w) / 2.0, (src_h - crop_h) / 2.0, crop_w, crop_h,
                           out_h, out_w, mode);
}

Image random_flip(const Image& img, double flip_prob, RngStream& rng) {
    if (rng.next_uniform() >= flip_prob) return img;
    Image out(img.height, img.width);
    for (std::size_t c = 0; c < Image::kChannels; ++c)
        for (std::size_t y = 0; y < img.height; ++y)
            for (std::size_t x = 0; x < img.width; ++x)
                out.at(c, y, x) = img.at(c, y, img.width - 1 - x);
    return out;
}

Image photometric_jitter(const Image& img, double gain_range, double bias_range, RngStream& rng) {
    Image out = img;
    for (std::size_t c = 0; c < Image::kChannels; ++c) {
        const double gain = rng.next_uniform(1.0 - gain_range, 1.0 + gain_range);
        const double bias = rng.next_uniform(-bias_range, bias_range);
        for (std::size_t y = 0; y < img.height; ++y)
            for (std::size_t x = 0; x < img.width; ++x)
                out.at(c, y, x) = gain * img.at(c, y, x) + bias;
    }
    out.clamp();
    return out;
}

Image binomial_blur(const Image& img) {
    static constexpr double kKernel[3] = {0.25, 0.5, 0.25};
    Image tmp(img.height, img.width);
    Image out(img.height, img.width);
    const long w = static_cast<long>(img.width), h = static_cast<long>(img.height);
    auto clampi = [](long v, long hi) { return std::min(hi, std::max(0L, v)); };
    for (std::size_t c = 0; c < Image::kChannels; ++c) {
        for (long y = 0; y < h; ++y)
            for (long x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int k = -1; k <= 1; ++k)
                    acc += kKernel[k + 1] *
                           img.at(c, static_cast<std::size_t>(y),
                                  static_cast<std::size_t>(clampi(x + k, w - 1)));
                tmp.at(c, static_cast<std::size_t>(y), static_cast<std::size_t>(x)) = acc;
            }
        for (long y = 0; y < h; ++y)
            for (long x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int k = -1; k <= 1; ++k)
                    acc += kKernel[k + 1] *
                           tmp.at(c, static_cast<std::size_t>(clampi(y + k, h - 1)),
                                  static_cast<std::size_t>(x));
                out.at(c, static_cast<std::size_t>(y), static_cast<std::size_t>(x)) = acc;
            }
    }
    return out;
}

Image additive_noise(const Image& img, double sigma, RngStream& rng) {
    Image out = img;
    for (double& p : out.pixels) p += sigma * rng.next_gaussian();
    out.clamp();
    return out;
}

namespace {

struct MaskBox {
    std::size_t x_lo, x_hi, y_lo, y_hi;  // half-open pixel ranges
};

// Pixel x is inside the box iff its center x+0.5 lies in [cx - w/2, cx + w/2).
MaskBox pixel_box(std::size_t height, std::size_t width, double lambda, double cx, double cy) {
    const double bw = static_cast<double>(width) * std::sqrt(lambda);
    const double bh = static_cast<double>(height) * std::sqrt(lambda);
    const auto edge_index = [](double edge, std::size_t limit) {
        const double idx = std::ceil(edge - 0.5);
        return static_cast<std::size_t>(
            std::min<double>(static_cast<double>(limit), std::max(0.0, idx)));
    };
    return MaskBox{edge_index(cx - bw / 2.0, width), edge_index(cx + bw / 2.0, width),
                   edge_index(cy - bh / 2.0, height), edge_index(cy + bh / 2.0, height)};
}

}  // namespace

std::size_t scalemix_mask_pixels(std::size_t height, std::size_t width, double lambda,
                                 double center_x, double center_y) {
    const MaskBox box = pixel_box(height, width, lambda, center_x, center_y);
    if (box.x_hi <= box.x_lo || box.y_hi <= box.y_lo) return 0;
    return (box.x_hi - box.x_lo) * (box.y_hi - box.y_lo);
}

Image scalemix_with_box(const Image& v1, const Image& v2, double lambda, double center_x,
                        double center_y) {
    if (v1.height != v2.height || v1.width != v2.width)
        throw ShapeError("scalemix: view sizes differ (" + std::to_string(v1.height) + "x" +
                         std::to_string(v1.width) + " vs " + std::to_string(v2.height) + "x" +
                         std::to_string(v2.width) + ")");
    const MaskBox box = pixel_box(v1.height, v1.width, lambda, center_x, center_y);
    Image out = v1;
    for (std::size_t c = 0; c < Image::kChannels; ++c)
        for (std::size_t y = box.y_lo; y < box.y_hi; ++y)
            for (std::size_t x = box.x_lo; x < box.x_hi; ++x)
                out.at(c, y, x) = v2.at(c, y, x);
    return out;
}

Image scalemix(const Image& v1, const Image& v2, RngStream& rng) {
    const double lambda = rng.next_uniform();
    const double cx = rng.next_uniform(0.0, static_cast<double>(v1.width));
    const double cy = rng.next_uniform(0.0, static_cast<double>(v1.height));
    return scalemix_with_box(v1, v2, lambda, cx, cy);
}

namespace {

Image chain_view(const Image& img, const Recipe& r, double scale_lo, double scale_hi,
                 std::size_t out_size, RngStream rng) {
    Image v = random_resized_crop(img, scale_lo, scale_hi, out_size, out_size,
                                  rng, r.resample);
    v = random_flip(v, r.flip_prob, rng);
    if (r.jitter_gain > 0.0 || r.jitter_bias > 0.0)
        v = photometric_jitter(v, r.jitter_gain, r.jitter_bias, rng);
    if (r.blur) v = binomial_blur(v);
    if (r.noise_sigma > 0.0) v = additive_noise(v, r.noise_sigma, rng);
    return v;
}

Image standard_view(const Image& img, const Recipe& recipe, const RngStream& rng) {
    Image v = chain_view(img, recipe, recipe.crop_scale_lo, recipe.crop_scale_hi,
                         recipe.view_size, rng.substream("std0"));
    if (recipe.scalemix) {
        Image v2 = chain_view(img, recipe, recipe.crop_scale_lo, recipe.crop_scale_hi,
                              recipe.view_size, rng.substream("std1"));
        RngStream mix = rng.substream("mix");
        v = scalemix(v, v2, mix);
    }
    return v;
}

Image small_view(const Image& img, const Recipe& recipe, std::size_t k, const RngStream& rng) {
    return chain_view(img, recipe, recipe.small_scale_lo, recipe.small_scale_hi,
                      recipe.small_size, rng.substream("small" + std::to_string(k)));
}

}  // namespace

ViewSet apply_recipe(const Image& img, const Recipe& recipe, const RngStream& rng) {
    ViewSet set;
    set.standard_views.push_back(standard_view(img, recipe, rng));
    for (std::size_t k = 0; k < recipe.multicrop_m; ++k)
        set.small_views.push_back(small_view(img, recipe, k, rng));
    return set;
}

Image apply_recipe_view(const Image& img, const Recipe& recipe, std::size_t slot,
                        const RngStream& rng) {
    if (slot == 0) return standard_view(img, recipe, rng);
    if (slot > recipe.multicrop_m)
        throw ConfigError("apply_recipe_view: slot " + std::to_string(slot) +
                          " out of range for m=" + std::to_string(recipe.multicrop_m));
    return small_view(img, recipe, slot - 1, rng);
}

}  // namespace asymlab
