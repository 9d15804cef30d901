#include "lexikit/simd/simd.hpp"

#include "kernels.hpp"
#include "lexikit/errors.hpp"

#include <atomic>

namespace lexikit::simd {

namespace {

Backend detect_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::Avx2;
#elif defined(__aarch64__) || defined(_M_ARM64)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

using KernelFn = double (*)(const double*, const double*, std::size_t);

struct KernelSet {
    KernelFn dot;
    KernelFn squared_distance;
};

KernelSet kernels_for(Backend backend) {
    switch (backend) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2:
            return {detail::dot_avx2_impl, detail::squared_distance_avx2_impl};
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
        case Backend::Neon:
            return {detail::dot_neon_impl, detail::squared_distance_neon_impl};
#endif
        default:
            return {detail::dot_scalar_impl, detail::squared_distance_scalar_impl};
    }
}

void check_sizes(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw Error("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
}

} // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

bool backend_available(Backend backend) {
    if (backend == Backend::Scalar) return true;
    return backend == detect_backend();
}

void force_backend(Backend backend) {
    if (!backend_available(backend))
        throw ValidationError(std::string("backend not available on this cpu: ") +
                              backend_name(backend));
    g_backend.store(backend, std::memory_order_relaxed);
}

void reset_backend() { g_backend.store(detect_backend(), std::memory_order_relaxed); }

double dot(std::span<const double> a, std::span<const double> b) {
    check_sizes(a, b);
    return kernels_for(active_backend()).dot(a.data(), b.data(), a.size());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    check_sizes(a, b);
    return kernels_for(active_backend()).squared_distance(a.data(), b.data(), a.size());
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    return detail::dot_scalar_impl(a, b, n);
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
    return detail::squared_distance_scalar_impl(a, b, n);
}

} // namespace lexikit::simd
