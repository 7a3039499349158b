#pragma once

#include <functional>

#include "asymlab/tensor.hpp"

namespace asymlab {

/// Central-difference gradient estimate of a scalar function:
/// g_i = (f(x + h·e_i) − f(x − h·e_i)) / 2h.
/// Throws NumericError pinpointing the element if an evaluation is
/// non-finite. The test suites use this as the independent oracle for
/// every analytic backward path.
Tensor finite_difference_gradient(const std::function<double(const Tensor&)>& f, const Tensor& x,
                                  double h = 1e-5);

/// Max elementwise deviation normalized by the reference gradient's
/// largest magnitude. Standard gradcheck metric.
double max_relative_error(const Tensor& actual, const Tensor& reference);

}  // namespace asymlab
