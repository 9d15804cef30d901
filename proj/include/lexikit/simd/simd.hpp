#pragma once

#include <cstddef>
#include <span>

namespace lexikit::simd {

enum class Backend { Scalar, Avx2, Neon };

// Backend chosen at startup from CPU capabilities.
Backend active_backend();
const char* backend_name(Backend backend);
bool backend_available(Backend backend);

// Overrides the dispatch, mainly for equivalence tests and benchmarks.
// Throws ValidationError if the backend is not available on this machine.
void force_backend(Backend backend);
void reset_backend();

// Dispatched kernels. Spans must have equal length; mismatch throws Error.
double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

// Scalar reference implementations, always available, never dispatched.
// These are the ground truth the SIMD variants are tested against.
double dot_scalar(const double* a, const double* b, std::size_t n);
double squared_distance_scalar(const double* a, const double* b, std::size_t n);

} // namespace lexikit::simd
