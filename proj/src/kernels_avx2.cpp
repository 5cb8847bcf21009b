#include <immintrin.h>

#include "spx/kernels.hpp"

namespace spx::kernels::avx2 {

namespace {

inline double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void shifted_adjacency_matvec(std::span<const VertexSet> rows, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const std::size_t full = n / 4 * 4;
    // Lane k of a chunk tests bit k of the 4-bit row slice.
    const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const VertexSet row = rows[i];
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t c = 0; c < full; c += 4) {
            const auto nibble = static_cast<long long>((row >> c) & 0xF);
            if (nibble == 0) continue;
            const __m256i sel = _mm256_and_si256(_mm256_set1_epi64x(nibble), lane_bits);
            const __m256d mask = _mm256_castsi256_pd(_mm256_cmpeq_epi64(sel, lane_bits));
            acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(x.data() + c), mask));
        }
        double sum = horizontal_sum(acc);
        for (std::size_t j = full; j < n; ++j) {
            if ((row >> j) & 1U) sum += x[j];
        }
        y[i] = x[i] + sum;
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const std::size_t full = n / 4 * 4;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < full; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
    }
    double sum = horizontal_sum(acc);
    for (std::size_t i = full; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace spx::kernels::avx2
