#include "tropical/matrix.hpp"

#include <stdexcept>

namespace tropical {

WeightMatrix WeightMatrix::identity(std::size_t n) {
  WeightMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Weight(0);
  return m;
}

Weight WeightMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(r, c);
}

WeightMatrix WeightMatrix::transposed() const {
  WeightMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

}  // namespace tropical
