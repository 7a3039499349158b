#include "asymlab/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asymlab/errors.hpp"

namespace asymlab {

Tensor finite_difference_gradient(const std::function<double(const Tensor&)>& f, const Tensor& x,
                                  double h) {
    Tensor grad(x.shape());
    Tensor probe = x;
    for (std::size_t i = 0; i < x.numel(); ++i) {
        const double orig = probe[i];
        probe[i] = orig + h;
        const double fp = f(probe);
        probe[i] = orig - h;
        const double fm = f(probe);
        probe[i] = orig;
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw NumericError("finite_difference_gradient: non-finite evaluation at element " +
                               std::to_string(i));
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

double max_relative_error(const Tensor& actual, const Tensor& reference) {
    require_same_shape(actual, reference, "max_relative_error");
    double scale = 0.0;
    for (std::size_t i = 0; i < reference.numel(); ++i)
        scale = std::max(scale, std::abs(reference[i]));
    if (scale == 0.0) scale = 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < actual.numel(); ++i)
        worst = std::max(worst, std::abs(actual[i] - reference[i]) / scale);
    return worst;
}

}  // namespace asymlab
