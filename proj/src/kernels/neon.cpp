#include <arm_neon.h>

#include "kernels/kernels_impl.hpp"

namespace abelpci::kernels::detail {

// Operands fit in int32, so narrow and use the widening multiply-accumulate.
void axpy_neon(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n) {
    const int32x2_t vs = vdup_n_s32(static_cast<std::int32_t>(s));
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        int32x2_t xs = vmovn_s64(vld1q_s64(x + i));
        vst1q_s64(y + i, vmlal_s32(vld1q_s64(y + i), xs, vs));
    }
    for (; i < n; ++i) y[i] += s * x[i];
}

std::uint64_t max_abs_neon(const std::int64_t* x, std::size_t n) {
    uint64x2_t best = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t a = vreinterpretq_u64_s64(vabsq_s64(vld1q_s64(x + i)));
        best = vbslq_u64(vcgtq_u64(a, best), a, best);
    }
    std::uint64_t m = vgetq_lane_u64(best, 0);
    if (vgetq_lane_u64(best, 1) > m) m = vgetq_lane_u64(best, 1);
    for (; i < n; ++i) {
        const auto v = x[i] < 0 ? static_cast<std::uint64_t>(-x[i]) : static_cast<std::uint64_t>(x[i]);
        if (v > m) m = v;
    }
    return m;
}

}  // namespace abelpci::kernels::detail
