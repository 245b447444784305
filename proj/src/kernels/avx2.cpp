#include <immintrin.h>

#include "kernels/kernels_impl.hpp"

namespace abelpci::kernels::detail {

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, which is exact for operands within kOperandLimit.
void axpy_avx2(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n) {
    const __m256i vs = _mm256_set1_epi64x(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i + 4));
        __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i y1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i + 4));
        y0 = _mm256_add_epi64(y0, _mm256_mul_epi32(x0, vs));
        y1 = _mm256_add_epi64(y1, _mm256_mul_epi32(x1, vs));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), y0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i + 4), y1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        y0 = _mm256_add_epi64(y0, _mm256_mul_epi32(x0, vs));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), y0);
    }
    for (; i < n; ++i) y[i] += s * x[i];
}

std::uint64_t max_abs_avx2(const std::int64_t* x, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i best = zero;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i sign = _mm256_cmpgt_epi64(zero, v);
        __m256i a = _mm256_sub_epi64(_mm256_xor_si256(v, sign), sign);
        __m256i gt = _mm256_cmpgt_epi64(a, best);
        best = _mm256_blendv_epi8(best, a, gt);
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    std::uint64_t m = 0;
    for (auto l : lanes) {
        if (static_cast<std::uint64_t>(l) > m) m = static_cast<std::uint64_t>(l);
    }
    for (; i < n; ++i) {
        const auto v = x[i] < 0 ? static_cast<std::uint64_t>(-x[i]) : static_cast<std::uint64_t>(x[i]);
        if (v > m) m = v;
    }
    return m;
}

}  // namespace abelpci::kernels::detail
