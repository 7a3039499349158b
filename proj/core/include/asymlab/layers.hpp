#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "asymlab/rng.hpp"
#include "asymlab/tensor.hpp"

namespace asymlab {

// ---------------------------------------------------------------------------
// Affine layer: y = x·Wᵀ + b
// ---------------------------------------------------------------------------

struct AffineCache {
    Tensor x;  // input, kept for dW
    std::size_t out_dim = 0;
};

Tensor affine_forward(const Tensor& x, const Tensor& w, const Tensor& b, AffineCache* cache);

struct AffineGrads {
    Tensor dx;
    Tensor dw;
    Tensor db;
};

AffineGrads affine_backward(const AffineCache& cache, const Tensor& w, const Tensor& dy);

// ---------------------------------------------------------------------------
// Grouped batch normalization over the batch axis.
//
// The batch is split into contiguous groups of `group_size` rows and each
// group is normalized with its own per-channel statistics (population
// variance). group_size == batch emulates normalization over all devices;
// group_size == batch/G emulates per-device statistics with G devices.
// An optional shuffle permutes batch membership before grouping and
// unpermutes the outputs, so only the group composition changes.
// ---------------------------------------------------------------------------

struct BnCache {
    std::vector<std::size_t> perm;  // row i of the grouped view = input row perm[i]
    Tensor xhat;                    // normalized activations, grouped order
    Tensor group_mean;              // [groups, d]
    Tensor group_inv_std;           // [groups, d]
    Tensor gamma;
    std::size_t group_size = 0;
};

Tensor group_bn_forward(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                        std::size_t group_size, double eps, RngStream* shuffle,
                        BnCache* cache);

struct BnGrads {
    Tensor dx;
    Tensor dgamma;
    Tensor dbeta;
};

BnGrads group_bn_backward(const BnCache& cache, const Tensor& dy);

// ---------------------------------------------------------------------------
// Row-wise ℓ2 normalization.
// ---------------------------------------------------------------------------

struct L2Cache {
    Tensor y;
    std::vector<double> norms;
};

/// Normalizes each row to unit Euclidean norm. Rows with norm <= 1e-12
/// raise NumericError naming the row index.
Tensor l2_normalize(const Tensor& x, L2Cache* cache = nullptr);

Tensor l2_normalize_backward(const L2Cache& cache, const Tensor& dy);

// ---------------------------------------------------------------------------
// ReLU.
// ---------------------------------------------------------------------------

Tensor relu_forward(const Tensor& x, Tensor* mask_cache);
Tensor relu_backward(const Tensor& mask, const Tensor& dy);

}  // namespace asymlab
