#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffskit {

using cdouble = std::complex<double>;

/// Dense row-major complex tensor of rank >= 1.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), data_(checked_size(shape_)) {}

  Tensor(std::vector<std::size_t> shape, std::vector<cdouble> values)
      : shape_(std::move(shape)), data_(std::move(values)) {
    if (data_.size() != checked_size(shape_)) {
      throw std::invalid_argument("Tensor: value count does not match shape");
    }
  }

  /// Rank-1 tensor from a flat vector.
  static Tensor line(std::vector<cdouble> values) {
    std::vector<std::size_t> shape{values.size()};
    return Tensor(std::move(shape), std::move(values));
  }

  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }

  /// Distance in flat index between consecutive entries along `axis`.
  std::size_t stride(std::size_t axis) const {
    std::size_t s = 1;
    for (std::size_t d = shape_.size(); d-- > axis + 1;) s *= shape_[d];
    return s;
  }

  cdouble* data() { return data_.data(); }
  const cdouble* data() const { return data_.data(); }
  const std::vector<cdouble>& values() const { return data_; }

  cdouble& operator[](std::size_t flat) { return data_[flat]; }
  const cdouble& operator[](std::size_t flat) const { return data_[flat]; }

  cdouble& at(std::span<const std::size_t> idx) { return data_[flat_index(idx)]; }
  const cdouble& at(std::span<const std::size_t> idx) const { return data_[flat_index(idx)]; }

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size()) {
      throw std::invalid_argument("Tensor: index rank mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t d = 0; d < shape_.size(); ++d) {
      if (idx[d] >= shape_[d]) throw std::out_of_range("Tensor: index out of range");
      flat = flat * shape_[d] + idx[d];
    }
    return flat;
  }

  bool operator==(const Tensor& other) const = default;

 private:
  static std::size_t checked_size(const std::vector<std::size_t>& shape) {
    if (shape.empty()) throw std::invalid_argument("Tensor: rank must be >= 1");
    std::size_t n = 1;
    for (std::size_t e : shape) {
      if (e == 0) throw std::invalid_argument("Tensor: zero extent");
      n *= e;
    }
    return n;
  }

  std::vector<std::size_t> shape_;
  std::vector<cdouble> data_;
};

/// Applies a 1-D operation to every line of `in` along `axis`. The operation
/// receives a contiguous source line of length extent(axis) and writes a
/// contiguous destination line of length `out_extent`.
template <typename LineOp>
Tensor transform_axis(const Tensor& in, std::size_t axis, std::size_t out_extent, LineOp&& op) {
  if (axis >= in.rank()) throw std::invalid_argument("transform_axis: axis out of range");
  std::vector<std::size_t> out_shape = in.shape();
  out_shape[axis] = out_extent;
  Tensor out(out_shape);

  const std::size_t n_in = in.extent(axis);
  const std::size_t stride = in.stride(axis);
  const std::size_t in_block = n_in * stride;
  const std::size_t out_block = out_extent * stride;
  const std::size_t n_outer = in.size() / in_block;

  std::vector<cdouble> src(n_in);
  std::vector<cdouble> dst(out_extent);
  for (std::size_t o = 0; o < n_outer; ++o) {
    for (std::size_t i = 0; i < stride; ++i) {
      const cdouble* ip = in.data() + o * in_block + i;
      for (std::size_t k = 0; k < n_in; ++k) src[k] = ip[k * stride];
      op(std::span<const cdouble>(src), std::span<cdouble>(dst));
      cdouble* op_ = out.data() + o * out_block + i;
      for (std::size_t k = 0; k < out_extent; ++k) op_[k * stride] = dst[k];
    }
  }
  return out;
}

}  // namespace ffskit
