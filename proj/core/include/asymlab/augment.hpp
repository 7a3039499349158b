#pragma once

#include <string>
#include <vector>

#include "asymlab/image.hpp"
#include "asymlab/rng.hpp"

namespace asymlab {

/// Declarative augmentation composition for one encoder side.
struct Recipe {
    std::string id = "baseline";

    // Standard-view geometric transform.
    double crop_scale_lo = 0.14;
    double crop_scale_hi = 1.0;
    double flip_prob = 0.5;
    std::size_t view_size = 32;

    // Photometric transforms: per-channel affine jitter, fixed 3x3 binomial
    // blur, additive Gaussian pixel noise.
    double jitter_gain = 0.0;   // gain drawn from [1-a, 1+a]
    double jitter_bias = 0.0;   // bias drawn from [-b, b]
    bool blur = false;
    double noise_sigma = 0.0;

    // Box-mask mixing of two recipe views of the same image.
    bool scalemix = false;

    // m extra low-resolution crops per draw.
    std::size_t multicrop_m = 0;
    std::size_t small_size = 16;
    double small_scale_lo = 0.05;
    double small_scale_hi = 0.14;

    Resample resample = Resample::Bilinear;

    std::size_t views_per_draw() const { return 1 + multicrop_m; }
};

/// One augmentation draw: a single standard view plus m small views.
struct ViewSet {
    std::vector<Image> standard_views;
    std::vector<Image> small_views;
};

/// Crops a sub-rectangle whose area fraction is uniform in [lo, hi] and
/// whose aspect ratio matches out_w/out_h, at a uniform position, then
/// resamples it to out_h x out_w. If no aspect-correct crop fits after 10
/// attempts, falls back to the largest centered crop (logged on stderr).
Image random_resized_crop(const Image& img, double scale_lo, double scale_hi, std::size_t out_h,
                          std::size_t out_w, RngStream& rng, Resample mode = Resample::Bilinear);

/// Mirrors the image horizontally with probability flip_prob.
Image random_flip(const Image& img, double flip_prob, RngStream& rng);

/// Per-channel affine jitter: gain in [1-a, 1+a], bias in [-b, b], clamped.
Image photometric_jitter(const Image& img, double gain_range, double bias_range, RngStream& rng);

/// Fixed 3x3 binomial blur with edge replication.
Image binomial_blur(const Image& img);

/// Additive i.i.d. Gaussian pixel noise, clamped.
Image additive_noise(const Image& img, double sigma, RngStream& rng);

/// Combines two same-size views of one image through a binary box mask:
/// out = M·v1 + (1−M)·v2 with M zero exactly inside a box of area fraction
/// λ ~ U(0,1), aspect ratio fixed to the view's, center uniform over the
/// image (box clipped at the borders).
Image scalemix(const Image& v1, const Image& v2, RngStream& rng);

/// Deterministic-box variant used by tests and by scalemix itself.
Image scalemix_with_box(const Image& v1, const Image& v2, double lambda, double center_x,
                        double center_y);

/// Number of pixels the scalemix zero-mask covers for the given box.
std::size_t scalemix_mask_pixels(std::size_t height, std::size_t width, double lambda,
                                 double center_x, double center_y);

/// Runs the full recipe: one standard view built by the descriptor chain
/// (two chain views mixed when scalemix is on) and m small low-resolution
/// views. Every transform consumes draws from its own labeled substream.
ViewSet apply_recipe(const Image& img, const Recipe& recipe, const RngStream& rng);

/// Builds only view `slot` of a draw (slot 0 = standard view, slot k>=1 =
/// small view k-1) with draws identical to apply_recipe's.
Image apply_recipe_view(const Image& img, const Recipe& recipe, std::size_t slot,
                        const RngStream& rng);

}  // namespace asymlab
