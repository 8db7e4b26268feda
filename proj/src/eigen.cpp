#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eqlines/kernels.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

void sort_descending(EigenDecomposition& e, bool vectors) {
  const std::size_t n = e.values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return e.values[a] > e.values[b]; });
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = e.values[idx[i]];
  if (vectors) {
    Matrix sorted(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto src = e.vectors.row(idx[i]);
      std::copy(src.begin(), src.end(), sorted.row(i).begin());
    }
    e.vectors = std::move(sorted);
  }
  e.values = std::move(values);
}

}  // namespace

namespace detail {

// Cyclic Jacobi. Rows p and q are rotated with the SIMD kernel; the symmetric
// columns are copied back afterwards. Eigenvectors are kept as rows.
EigenDecomposition jacobi_eigen(Matrix a, bool vectors) {
  const std::size_t n = a.rows();
  const auto& k = kernels::active();
  Matrix vt = vectors ? Matrix::identity(n) : Matrix();

  double frob = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) frob += a.data()[i] * a.data()[i];
  frob = std::sqrt(frob);
  const double target = 1e-15 * frob;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= target || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (sweep > 3 && std::fabs(apq) * 1e3 + std::fabs(app) == std::fabs(app) &&
            std::fabs(apq) * 1e3 + std::fabs(aqq) == std::fabs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        k.rotate(a.row(p).data(), a.row(q).data(), n, c, s);
        for (std::size_t r = 0; r < n; ++r) {
          a(r, p) = a(p, r);
          a(r, q) = a(q, r);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        if (vectors) k.rotate(vt.row(p).data(), vt.row(q).data(), n, c, s);
      }
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(vt);
  sort_descending(out, vectors);
  return out;
}

// Householder tridiagonalization followed by the implicit QL iteration
// (the EISPACK tred2/tql2 pair).
EigenDecomposition tridiagonal_ql_eigen(const Matrix& a, bool vectors) {
  const std::size_t n = a.rows();
  EigenDecomposition out;
  if (n == 0) return out;
  Matrix v = a;
  std::vector<double> d(n), e(n);

  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);
  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t kk = 0; kk < i; ++kk) scale += std::fabs(d[kk]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t kk = 0; kk < i; ++kk) {
        d[kk] /= scale;
        h += d[kk] * d[kk];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t kk = j + 1; kk + 1 <= i; ++kk) {
          g += v(kk, j) * d[kk];
          e[kk] += v(kk, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t kk = j; kk + 1 <= i; ++kk) v(kk, j) -= (f * e[kk] + g * d[kk]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  if (vectors) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      v(n - 1, i) = v(i, i);
      v(i, i) = 1.0;
      const double h = d[i + 1];
      if (h != 0.0) {
        for (std::size_t kk = 0; kk <= i; ++kk) d[kk] = v(kk, i + 1) / h;
        for (std::size_t j = 0; j <= i; ++j) {
          double g = 0.0;
          for (std::size_t kk = 0; kk <= i; ++kk) g += v(kk, i + 1) * v(kk, j);
          for (std::size_t kk = 0; kk <= i; ++kk) v(kk, j) -= g * d[kk];
        }
      }
      for (std::size_t kk = 0; kk <= i; ++kk) v(kk, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = v(n - 1, j);
      v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
  } else {
    for (std::size_t j = 0; j < n; ++j) d[j] = v(j, j);
  }
  e[0] = 0.0;

  // Rows of vt are eigenvectors; the QL rotations act on adjacent rows.
  Matrix vt = vectors ? transpose(v) : Matrix();
  const auto& kern = kernels::active();

  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::fabs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m == n) m = n - 1;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 200) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;
        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (vectors) kern.rotate(vt.row(i).data(), vt.row(i + 1).data(), n, c, s);
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::fabs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  out.values = std::move(d);
  out.vectors = std::move(vt);
  sort_descending(out, vectors);
  return out;
}

}  // namespace detail

EigenDecomposition eigen_decompose(const Matrix& m, const EigenOptions& options) {
  if (!m.square()) throw std::invalid_argument("eigen_decompose: matrix is not square");
  for (std::size_t i = 0; i < m.rows() * m.cols(); ++i)
    if (!std::isfinite(m.data()[i])) throw std::invalid_argument("eigen_decompose: non-finite entry");
  const double scale = std::max(1.0, max_abs(m));
  if (asymmetry(m) > 1e-12 * scale) throw std::invalid_argument("eigen_decompose: matrix is not symmetric");
  if (m.rows() <= options.jacobi_max_order) return detail::jacobi_eigen(m, options.vectors);
  return detail::tridiagonal_ql_eigen(m, options.vectors);
}

}  // namespace eqlines
