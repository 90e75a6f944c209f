#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vertexlab/matrix.hpp"

namespace vertexlab::exact {

// Multi-site index arithmetic. Site 0 is the most significant digit.
class TensorShape {
 public:
  explicit TensorShape(std::vector<int> dims);
  static TensorShape uniform(int d, int sites) { return TensorShape(std::vector<int>(static_cast<std::size_t>(sites), d)); }

  std::size_t size() const { return size_; }
  int sites() const { return static_cast<int>(dims_.size()); }
  int dim(int site) const { return dims_[static_cast<std::size_t>(site)]; }
  std::size_t stride(int site) const { return strides_[static_cast<std::size_t>(site)]; }
  int digit(std::size_t index, int site) const {
    return static_cast<int>((index / strides_[static_cast<std::size_t>(site)]) % static_cast<std::size_t>(dims_[static_cast<std::size_t>(site)]));
  }
  std::vector<int> digits(std::size_t index) const;
  std::size_t index(const std::vector<int>& digits) const;
  const std::vector<int>& dims() const { return dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

namespace detail {
struct LocalLayout {
  std::vector<std::size_t> bases;    // full indices with zero digits on the active sites
  std::vector<std::size_t> offsets;  // offset of each local index
};
LocalLayout layout(const TensorShape& shape, const std::vector<int>& sites);
}  // namespace detail

// Same as apply_local, for any coefficient ring.
template <class T>
std::vector<T> apply_local_any(const Matrix<T>& op, const TensorShape& shape, const std::vector<int>& sites,
                               const std::vector<T>& v) {
  if (v.size() != shape.size()) throw std::invalid_argument("vector length mismatch");
  const detail::LocalLayout lay = detail::layout(shape, sites);
  if (op.rows() != lay.offsets.size()) throw std::invalid_argument("local operator has the wrong dimension");
  std::vector<T> out(v.size(), T(0));
  const std::size_t n = op.rows();
  for (std::size_t base : lay.bases)
    for (std::size_t b = 0; b < n; ++b) {
      const T& vb = v[base + lay.offsets[b]];
      if (is_zero_value(vb)) continue;
      for (std::size_t a = 0; a < n; ++a)
        if (!is_zero_value(op(a, b))) out[base + lay.offsets[a]] += op(a, b) * vb;
    }
  return out;
}

// The operator `op` acting on `sites` (in that order), identity elsewhere.
ScalarMatrix embed(const ScalarMatrix& op, const TensorShape& shape, const std::vector<int>& sites);
ScalarVector apply_local(const ScalarMatrix& op, const TensorShape& shape, const std::vector<int>& sites,
                         const ScalarVector& v);
// Covector (row vector) times the embedded operator.
ScalarVector apply_local_left(const ScalarVector& v, const ScalarMatrix& op, const TensorShape& shape,
                              const std::vector<int>& sites);

ScalarVector tensor(const ScalarVector& a, const ScalarVector& b);
ScalarVector basis_vector(std::size_t dim, std::size_t k);

// Transpose with respect to one tensor factor.
ScalarMatrix partial_transpose(const ScalarMatrix& m, const TensorShape& shape, int site);

}  // namespace vertexlab::exact
