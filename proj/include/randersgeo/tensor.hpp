#pragma once

#include <Eigen/Dense>
#include <cassert>
#include <vector>

namespace randers {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Dense rank-3 array, row-major in the last index.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int d0, int d1, int d2) : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, 0.0) {}

    double& operator()(int i, int j, int k) { return data_[(i * d1_ + j) * d2_ + k]; }
    double operator()(int i, int j, int k) const { return data_[(i * d1_ + j) * d2_ + k]; }

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }

    double max_abs() const {
        double m = 0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    int d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<double> data_;
};

class Tensor4 {
public:
    Tensor4() = default;
    Tensor4(int d0, int d1, int d2, int d3)
        : d0_(d0), d1_(d1), d2_(d2), d3_(d3), data_(d0 * d1 * d2 * d3, 0.0) {}

    double& operator()(int i, int j, int k, int l) {
        return data_[((i * d1_ + j) * d2_ + k) * d3_ + l];
    }
    double operator()(int i, int j, int k, int l) const {
        return data_[((i * d1_ + j) * d2_ + k) * d3_ + l];
    }

    int dim0() const { return d0_; }

private:
    int d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<double> data_;
};

}  // namespace randers
