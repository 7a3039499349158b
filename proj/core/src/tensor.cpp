#include "asymlab/tensor.hpp"

#include <Eigen/Core>
#include <cmath>
#include <numeric>
#include <sstream>

#include "asymlab/errors.hpp"

namespace asymlab {

namespace {

std::size_t checked_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) {
        if (e == 0) throw ShapeError("tensor extent must be positive");
        n *= e;
    }
    return n;
}

using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRM = Eigen::Map<MatrixRM>;
using ConstMapRM = Eigen::Map<const MatrixRM>;

ConstMapRM as_matrix(const Tensor& t) {
    return ConstMapRM(t.data(), static_cast<Eigen::Index>(t.extent(0)),
                      static_cast<Eigen::Index>(t.extent(1)));
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(checked_numel(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_numel(shape_) != data_.size())
        throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                         " does not match shape " + shape_str());
}

Tensor Tensor::full(std::vector<std::size_t> shape, double value) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), value);
    return t;
}

Tensor Tensor::row(std::initializer_list<double> values) {
    return Tensor({1, values.size()}, std::vector<double>(values));
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
    os << "]";
    return os.str();
}

void Tensor::require_finite(const std::string& what) const {
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!std::isfinite(data_[i]))
            throw NumericError(what + ": non-finite value at flat index " + std::to_string(i));
    }
}

Tensor& Tensor::operator+=(const Tensor& other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " +
                         b.shape_str());
}

void require_rank(const Tensor& t, std::size_t rank, const char* op) {
    if (t.rank() != rank)
        throw ShapeError(std::string(op) + ": expected rank " + std::to_string(rank) + ", got " +
                         t.shape_str());
}

Tensor matmul_nt(const Tensor& x, const Tensor& w) {
    require_rank(x, 2, "matmul_nt");
    require_rank(w, 2, "matmul_nt");
    if (x.extent(1) != w.extent(1))
        throw ShapeError("matmul_nt: inner extent mismatch " + x.shape_str() + " vs " +
                         w.shape_str());
    Tensor y({x.extent(0), w.extent(0)});
    MapRM(y.data(), static_cast<Eigen::Index>(y.extent(0)),
          static_cast<Eigen::Index>(y.extent(1)))
        .noalias() = as_matrix(x) * as_matrix(w).transpose();
    return y;
}

Tensor matmul_tn(const Tensor& a, const Tensor& b) {
    require_rank(a, 2, "matmul_tn");
    require_rank(b, 2, "matmul_tn");
    if (a.extent(0) != b.extent(0))
        throw ShapeError("matmul_tn: batch extent mismatch " + a.shape_str() + " vs " +
                         b.shape_str());
    Tensor y({a.extent(1), b.extent(1)});
    MapRM(y.data(), static_cast<Eigen::Index>(y.extent(0)),
          static_cast<Eigen::Index>(y.extent(1)))
        .noalias() = as_matrix(a).transpose() * as_matrix(b);
    return y;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    require_rank(a, 2, "matmul");
    require_rank(b, 2, "matmul");
    if (a.extent(1) != b.extent(0))
        throw ShapeError("matmul: inner extent mismatch " + a.shape_str() + " vs " +
                         b.shape_str());
    Tensor y({a.extent(0), b.extent(1)});
    MapRM(y.data(), static_cast<Eigen::Index>(y.extent(0)),
          static_cast<Eigen::Index>(y.extent(1)))
        .noalias() = as_matrix(a) * as_matrix(b);
    return y;
}

}  // namespace asymlab
