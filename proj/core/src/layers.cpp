#include "asymlab/layers.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "asymlab/errors.hpp"

namespace asymlab {

Tensor affine_forward(const Tensor& x, const Tensor& w, const Tensor& b, AffineCache* cache) {
    require_rank(x, 2, "affine_forward");
    require_rank(w, 2, "affine_forward");
    if (x.extent(1) != w.extent(1) || b.numel() != w.extent(0))
        throw ShapeError("affine_forward: x " + x.shape_str() + ", W " + w.shape_str() + ", b " +
                         b.shape_str());
    Tensor y = matmul_nt(x, w);
    const std::size_t batch = y.extent(0), out = y.extent(1);
    for (std::size_t i = 0; i < batch; ++i)
        for (std::size_t j = 0; j < out; ++j) y(i, j) += b[j];
    if (cache) {
        cache->x = x;
        cache->out_dim = out;
    }
    return y;
}

AffineGrads affine_backward(const AffineCache& cache, const Tensor& w, const Tensor& dy) {
    require_rank(dy, 2, "affine_backward");
    if (dy.extent(0) != cache.x.extent(0) || dy.extent(1) != cache.out_dim)
        throw ShapeError("affine_backward: dY " + dy.shape_str() + " vs cached x " +
                         cache.x.shape_str());
    AffineGrads g;
    g.dx = matmul(dy, w);
    g.dw = matmul_tn(dy, cache.x);
    g.db = Tensor({dy.extent(1)});
    for (std::size_t i = 0; i < dy.extent(0); ++i)
        for (std::size_t j = 0; j < dy.extent(1); ++j) g.db[j] += dy(i, j);
    return g;
}

Tensor group_bn_forward(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                        std::size_t group_size, double eps, RngStream* shuffle,
                        BnCache* cache) {
    require_rank(x, 2, "group_bn_forward");
    const std::size_t batch = x.extent(0), dim = x.extent(1);
    if (gamma.numel() != dim || beta.numel() != dim)
        throw ShapeError("group_bn_forward: affine params " + gamma.shape_str() +
                         " do not match feature dim " + std::to_string(dim));
    if (eps <= 0.0) throw ConfigError("group_bn_forward: eps must be positive");
    if (group_size == 0 || batch % group_size != 0)
        throw ConfigError("group_bn_forward: group size " + std::to_string(group_size) +
                          " does not divide batch " + std::to_string(batch));
    if (group_size < 2)
        throw NumericError("group_bn_forward: group of size 1 has degenerate statistics");

    std::vector<std::size_t> perm(batch);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (shuffle) {
        for (std::size_t i = batch - 1; i > 0; --i) {
            const std::size_t j = shuffle->next_u64() % (i + 1);
            std::swap(perm[i], perm[j]);
        }
    }

    const std::size_t groups = batch / group_size;
    Tensor xhat({batch, dim});
    Tensor mean({groups, dim});
    Tensor inv_std({groups, dim});
    Tensor y({batch, dim});

    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t row0 = g * group_size;
        for (std::size_t c = 0; c < dim; ++c) {
            double mu = 0.0;
            for (std::size_t r = 0; r < group_size; ++r) mu += x(perm[row0 + r], c);
            mu /= static_cast<double>(group_size);
            double var = 0.0;
            for (std::size_t r = 0; r < group_size; ++r) {
                const double d = x(perm[row0 + r], c) - mu;
                var += d * d;
            }
            var /= static_cast<double>(group_size);
            const double istd = 1.0 / std::sqrt(var + eps);
            mean(g, c) = mu;
            inv_std(g, c) = istd;
            for (std::size_t r = 0; r < group_size; ++r) {
                const double xh = (x(perm[row0 + r], c) - mu) * istd;
                xhat(row0 + r, c) = xh;
                y(perm[row0 + r], c) = gamma[c] * xh + beta[c];
            }
        }
    }

    if (cache) {
        cache->perm = std::move(perm);
        cache->xhat = std::move(xhat);
        cache->group_mean = std::move(mean);
        cache->group_inv_std = std::move(inv_std);
        cache->gamma = gamma;
        cache->group_size = group_size;
    }
    return y;
}

BnGrads group_bn_backward(const BnCache& cache, const Tensor& dy) {
    require_rank(dy, 2, "group_bn_backward");
    const std::size_t batch = cache.xhat.extent(0), dim = cache.xhat.extent(1);
    if (dy.extent(0) != batch || dy.extent(1) != dim)
        throw ShapeError("group_bn_backward: dY " + dy.shape_str() + " vs cached " +
                         cache.xhat.shape_str());
    const std::size_t n = cache.group_size;
    const std::size_t groups = batch / n;

    BnGrads g;
    g.dx = Tensor({batch, dim});
    g.dgamma = Tensor({dim});
    g.dbeta = Tensor({dim});

    for (std::size_t grp = 0; grp < groups; ++grp) {
        const std::size_t row0 = grp * n;
        for (std::size_t c = 0; c < dim; ++c) {
            // Grouped-order views of dY through the cached permutation.
            double sum_dxh = 0.0, sum_dxh_xh = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                const double dyv = dy(cache.perm[row0 + r], c);
                const double xh = cache.xhat(row0 + r, c);
                g.dbeta[c] += dyv;
                g.dgamma[c] += dyv * xh;
                const double dxh = dyv * cache.gamma[c];
                sum_dxh += dxh;
                sum_dxh_xh += dxh * xh;
            }
            const double istd_over_n = cache.group_inv_std(grp, c) / static_cast<double>(n);
            for (std::size_t r = 0; r < n; ++r) {
                const double dxh = dy(cache.perm[row0 + r], c) * cache.gamma[c];
                const double xh = cache.xhat(row0 + r, c);
                g.dx(cache.perm[row0 + r], c) =
                    istd_over_n * (static_cast<double>(n) * dxh - sum_dxh - xh * sum_dxh_xh);
            }
        }
    }
    return g;
}

Tensor l2_normalize(const Tensor& x, L2Cache* cache) {
    require_rank(x, 2, "l2_normalize");
    const std::size_t batch = x.extent(0), dim = x.extent(1);
    Tensor y({batch, dim});
    std::vector<double> norms(batch);
    for (std::size_t i = 0; i < batch; ++i) {
        double sq = 0.0;
        for (std::size_t c = 0; c < dim; ++c) sq += x(i, c) * x(i, c);
        const double norm = std::sqrt(sq);
        if (!(norm > 1e-12))
            throw NumericError("l2_normalize: degenerate near-zero norm at row " +
                               std::to_string(i));
        norms[i] = norm;
        for (std::size_t c = 0; c < dim; ++c) y(i, c) = x(i, c) / norm;
    }
    if (cache) {
        cache->y = y;
        cache->norms = std::move(norms);
    }
    return y;
}

Tensor l2_normalize_backward(const L2Cache& cache, const Tensor& dy) {
    require_same_shape(cache.y, dy, "l2_normalize_backward");
    const std::size_t batch = dy.extent(0), dim = dy.extent(1);
    Tensor dx({batch, dim});
    for (std::size_t i = 0; i < batch; ++i) {
        double dot = 0.0;
        for (std::size_t c = 0; c < dim; ++c) dot += cache.y(i, c) * dy(i, c);
        for (std::size_t c = 0; c < dim; ++c)
            dx(i, c) = (dy(i, c) - cache.y(i, c) * dot) / cache.norms[i];
    }
    return dx;
}

Tensor relu_forward(const Tensor& x, Tensor* mask_cache) {
    Tensor y = x;
    Tensor mask(x.shape());
    for (std::size_t i = 0; i < x.numel(); ++i) {
        if (x[i] > 0.0) {
            mask[i] = 1.0;
        } else {
            y[i] = 0.0;
        }
    }
    if (mask_cache) *mask_cache = std::move(mask);
    return y;
}

Tensor relu_backward(const Tensor& mask, const Tensor& dy) {
    require_same_shape(mask, dy, "relu_backward");
    Tensor dx = dy;
    for (std::size_t i = 0; i < dx.numel(); ++i) dx[i] *= mask[i];
    return dx;
}

}  // namespace asymlab
