#include "eqlines/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace eqlines::kernels {

#if !defined(EQLINES_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelTable* initial_choice() {
  const KernelTable* avx2 = cpu_has_avx2() ? avx2_kernels() : nullptr;
  if (const char* env = std::getenv("EQLINES_SIMD")) {
    if (std::string(env) == "scalar") return &scalar_kernels();
  }
  return avx2 != nullptr ? avx2 : &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_choice()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(std::string_view name) {
  if (name == "scalar") {
    current().store(&scalar_kernels(), std::memory_order_release);
    return true;
  }
  if (name == "avx2") {
    const KernelTable* t = avx2_kernels();
    if (t == nullptr || !cpu_has_avx2()) return false;
    current().store(t, std::memory_order_release);
    return true;
  }
  return false;
}

}  // namespace eqlines::kernels
