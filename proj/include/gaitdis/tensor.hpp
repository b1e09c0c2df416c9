#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaitdis {

using ArrayX = Eigen::ArrayXd;
using VectorX = Eigen::VectorXd;
using MatrixX = Eigen::MatrixXd;
// Row-major maps over flat tensor storage.
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatMap = Eigen::Map<RowMat>;
using ConstRowMatMap = Eigen::Map<const RowMat>;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Dense multi-dimensional array of doubles, row-major.
///
/// Shapes are small (ndim <= 3 in practice); data lives in one contiguous
/// Eigen array so matrix views are zero-copy.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<int> shape) {
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = ArrayX::Zero(count(t.shape_));
    return t;
  }

  static Tensor scalar(double v) {
    Tensor t = zeros({1});
    t.data_[0] = v;
    return t;
  }

  static Tensor from(std::vector<int> shape, ArrayX data) {
    require(count(shape) == data.size(), "tensor: shape does not match data length");
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = std::move(data);
    return t;
  }

  static Tensor from(std::vector<int> shape, std::initializer_list<double> vals) {
    ArrayX a(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (double v : vals) a[i++] = v;
    return from(std::move(shape), std::move(a));
  }

  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  Eigen::Index size() const { return data_.size(); }

  ArrayX& array() { return data_; }
  const ArrayX& array() const { return data_; }

  double& operator[](Eigen::Index i) { return data_[i]; }
  double operator[](Eigen::Index i) const { return data_[i]; }

  // 2-D element access (row-major).
  double& at(int r, int c) { return data_[static_cast<Eigen::Index>(r) * dim(1) + c]; }
  double at(int r, int c) const { return data_[static_cast<Eigen::Index>(r) * dim(1) + c]; }

  /// View an N-D tensor as a rows x cols row-major matrix (rows = dim 0).
  RowMatMap mat() {
    require(ndim() >= 1, "tensor: mat() on empty shape");
    const Eigen::Index rows = dim(0);
    return RowMatMap(data_.data(), rows, size() / rows);
  }
  ConstRowMatMap mat() const {
    require(ndim() >= 1, "tensor: mat() on empty shape");
    const Eigen::Index rows = dim(0);
    return ConstRowMatMap(data_.data(), rows, size() / rows);
  }

  /// Flat vector view.
  Eigen::Map<VectorX> vec() { return {data_.data(), data_.size()}; }
  Eigen::Map<const VectorX> vec() const { return {data_.data(), data_.size()}; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  bool all_finite() const { return data_.allFinite(); }

  std::string shape_str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < shape_.size(); ++i) os << (i ? "x" : "") << shape_[i];
    os << ']';
    return os.str();
  }

  static Eigen::Index count(const std::vector<int>& shape) {
    Eigen::Index n = 1;
    for (int d : shape) {
      require(d > 0, "tensor: nonpositive dimension");
      n *= d;
    }
    return n;
  }

 private:
  std::vector<int> shape_;
  ArrayX data_;
};

}  // namespace gaitdis
