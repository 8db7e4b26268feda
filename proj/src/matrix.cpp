#include "eqlines/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "eqlines/kernels.hpp"

namespace eqlines {

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transposed: inner dimensions differ");
  const auto& k = kernels::active();
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      out(i, j) = k.dot(a.row(i).data(), b.row(j).data(), a.cols());
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double asymmetry(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("asymmetry: matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) worst = std::max(worst, std::fabs(a(i, j) - a(j, i)));
  return worst;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) m = std::max(m, std::fabs(a.data()[i]));
  return m;
}

}  // namespace eqlines
