#include <atomic>
#include <cstdlib>
#include <string_view>

#include "schemelab/kernels.hpp"

namespace schemelab::kernels {

#if defined(SCHEMELAB_BUILD_AVX2)
const KernelTable& avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(SCHEMELAB_BUILD_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* select_from_env() {
  const char* env = std::getenv("SCHEME_LAB_SIMD");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return &scalar_table();
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{select_from_env()};
  return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void force(const KernelTable& table) { slot().store(&table, std::memory_order_release); }

}  // namespace schemelab::kernels
