#pragma once
// Dense inner-loop kernels with a scalar reference and runtime-selected
// vector variants. Every variant must agree with the scalar one: elementwise
// kernels bit for bit, reductions up to summation order.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace schemelab::kernels {

using DotFn = double (*)(const double* x, const double* y, std::size_t n);
using AxpyFn = void (*)(double alpha, const double* x, double* y, std::size_t n);
// x <- c*x - s*y, y <- s*x + c*y (applied with the old x).
using RotateFn = void (*)(double* x, double* y, double c, double s, std::size_t n);
using AndPopcountFn = std::uint64_t (*)(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t words);

struct KernelTable {
  std::string_view name;
  DotFn dot;
  AxpyFn axpy;
  RotateFn rotate;
  AndPopcountFn and_popcount;
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();

// Selected once: SCHEME_LAB_SIMD=scalar|avx2|auto (default auto).
const KernelTable& active();

// Overrides the selection for the rest of the process; used by tests.
void force(const KernelTable& table);

}  // namespace schemelab::kernels
