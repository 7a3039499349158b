#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace asymlab {

/// Dense row-major array of 64-bit floats. The sole numeric carrier for
/// activations, weights, encodings and statistics.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<std::size_t> shape, double value);
    static Tensor row(std::initializer_list<double> values);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t extent(std::size_t axis) const { return shape_[axis]; }
    std::size_t numel() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    /// 2-D access; unchecked beyond debug builds.
    double& operator()(std::size_t r, std::size_t c) { return data_[r * shape_[1] + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * shape_[1] + c]; }

    /// 3-D access for [N, K, h]-style buffers.
    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    std::string shape_str() const;

    /// Throws NumericError naming the first offending element if any value
    /// is NaN or infinite. `what` names the tensor in the message.
    void require_finite(const std::string& what) const;

    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(double s);

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

/// Shape helpers shared by layer code.
void require_same_shape(const Tensor& a, const Tensor& b, const char* op);
void require_rank(const Tensor& t, std::size_t rank, const char* op);

/// y = x · Wᵀ   (x: [B, in], w: [out, in]) → [B, out]
Tensor matmul_nt(const Tensor& x, const Tensor& w);
/// y = aᵀ · b   (a: [B, m], b: [B, n]) → [m, n]
Tensor matmul_tn(const Tensor& a, const Tensor& b);
/// y = a · b    (a: [m, k], b: [k, n]) → [m, n]
Tensor matmul(const Tensor& a, const Tensor& b);

}  // namespace asymlab
