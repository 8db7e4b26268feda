#pragma once

// Dense floating-point inner loops used by the eigensolvers, Gram products and
// family verification. Each kernel has a scalar reference implementation and,
// on x86-64, an AVX2 variant; the active table is chosen once at runtime.

#include <cstddef>
#include <string_view>

namespace eqlines::kernels {

struct KernelTable {
  std::string_view name;

  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // Plane rotation of two rows: (x, y) <- (c x - s y, s x + c y).
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);

  // max_i |a[i] - b[i]|
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variants were not compiled in.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

// The table used by the library. Honors EQLINES_SIMD=scalar|avx2 when set.
const KernelTable& active();

// Overrides the runtime choice (tests, CLI --simd). Passing an unavailable
// variant leaves the selection unchanged and returns false.
bool select(std::string_view name);

}  // namespace eqlines::kernels
