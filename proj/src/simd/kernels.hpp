#pragma once

// Internal kernel declarations shared between the per-ISA translation units
// and the dispatcher. Raw-pointer signatures; length checks happen above.

#include <cstddef>

namespace lexikit::simd::detail {

double dot_scalar_impl(const double* a, const double* b, std::size_t n);
double squared_distance_scalar_impl(const double* a, const double* b, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2_impl(const double* a, const double* b, std::size_t n);
double squared_distance_avx2_impl(const double* a, const double* b, std::size_t n);
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
double dot_neon_impl(const double* a, const double* b, std::size_t n);
double squared_distance_neon_impl(const double* a, const double* b, std::size_t n);
#endif

} // namespace lexikit::simd::detail
