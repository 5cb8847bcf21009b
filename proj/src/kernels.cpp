#include "spx/kernels.hpp"

#include <atomic>

#include "spx/error.hpp"

namespace spx::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(SPX_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect() noexcept { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

const char* backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) noexcept { return b == Backend::scalar || cpu_has_avx2(); }

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw Error(ErrorKind::invalid_spec, std::string("kernel backend '") + backend_name(b) + "' not available");
    }
    current().store(b, std::memory_order_relaxed);
}

void shifted_adjacency_matvec(std::span<const VertexSet> rows, std::span<const double> x, std::span<double> y) {
#if defined(SPX_HAVE_AVX2_KERNELS)
    if (active_backend() == Backend::avx2) return avx2::shifted_adjacency_matvec(rows, x, y);
#endif
    scalar::shifted_adjacency_matvec(rows, x, y);
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(SPX_HAVE_AVX2_KERNELS)
    if (active_backend() == Backend::avx2) return avx2::dot(a, b);
#endif
    return scalar::dot(a, b);
}

}  // namespace spx::kernels
