#include "vertexlab/tensor.hpp"

#include <stdexcept>

namespace vertexlab::exact {

TensorShape::TensorShape(std::vector<int> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
  for (std::size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] <= 0) throw std::invalid_argument("non-positive local dimension");
    strides_[k] = size_;
    size_ *= static_cast<std::size_t>(dims_[k]);
  }
}

std::vector<int> TensorShape::digits(std::size_t index) const {
  std::vector<int> d(dims_.size());
  for (int s = 0; s < sites(); ++s) d[static_cast<std::size_t>(s)] = digit(index, s);
  return d;
}

std::size_t TensorShape::index(const std::vector<int>& digits) const {
  std::size_t k = 0;
  for (std::size_t s = 0; s < digits.size(); ++s) k += static_cast<std::size_t>(digits[s]) * strides_[s];
  return k;
}

namespace detail {

LocalLayout layout(const TensorShape& shape, const std::vector<int>& sites) {
  std::vector<bool> active(static_cast<std::size_t>(shape.sites()), false);
  std::size_t local = 1;
  for (int s : sites) {
    if (s < 0 || s >= shape.sites() || active[static_cast<std::size_t>(s)]) throw std::invalid_argument("bad site list");
    active[static_cast<std::size_t>(s)] = true;
    local *= static_cast<std::size_t>(shape.dim(s));
  }
  LocalLayout out;
  out.offsets.resize(local);
  for (std::size_t l = 0; l < local; ++l) {
    std::size_t rem = l, off = 0;
    for (std::size_t k = sites.size(); k-- > 0;) {
      const int s = sites[k];
      const std::size_t d = static_cast<std::size_t>(shape.dim(s));
      off += (rem % d) * shape.stride(s);
      rem /= d;
    }
    out.offsets[l] = off;
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    bool zero = true;
    for (int s : sites)
      if (shape.digit(i, s) != 0) {
        zero = false;
        break;
      }
    if (zero) out.bases.push_back(i);
  }
  return out;
}

}  // namespace detail

using detail::layout;
using detail::LocalLayout;

ScalarMatrix embed(const ScalarMatrix& op, const TensorShape& shape, const std::vector<int>& sites) {
  const LocalLayout lay = layout(shape, sites);
  if (op.rows() != lay.offsets.size() || op.cols() != lay.offsets.size())
    throw std::invalid_argument("local operator has the wrong dimension");
  ScalarMatrix out(shape.size());
  for (std::size_t base : lay.bases)
    for (std::size_t a = 0; a < op.rows(); ++a)
      for (std::size_t b = 0; b < op.cols(); ++b)
        if (!op(a, b).is_zero()) out(base + lay.offsets[a], base + lay.offsets[b]) = op(a, b);
  return out;
}

ScalarVector apply_local(const ScalarMatrix& op, const TensorShape& shape, const std::vector<int>& sites,
                         const ScalarVector& v) {
  return apply_local_any(op, shape, sites, v);
}

ScalarVector apply_local_left(const ScalarVector& v, const ScalarMatrix& op, const TensorShape& shape,
                              const std::vector<int>& sites) {
  return apply_local(op.transpose(), shape, sites, v);
}

ScalarVector tensor(const ScalarVector& a, const ScalarVector& b) {
  ScalarVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

ScalarVector basis_vector(std::size_t dim, std::size_t k) {
  ScalarVector v(dim);
  v.at(k) = ExactScalar(1);
  return v;
}

ScalarMatrix partial_transpose(const ScalarMatrix& m, const TensorShape& shape, int site) {
  ScalarMatrix out(m.rows(), m.cols());
  const std::size_t stride = shape.stride(site);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      const int di = shape.digit(i, site), dj = shape.digit(j, site);
      const std::size_t i2 = i - static_cast<std::size_t>(di) * stride + static_cast<std::size_t>(dj) * stride;
      const std::size_t j2 = j - static_cast<std::size_t>(dj) * stride + static_cast<std::size_t>(di) * stride;
      out(i2, j2) = m(i, j);
    }
  return out;
}

}  // namespace vertexlab::exact
