#include "kernels/kernels_impl.hpp"

namespace abelpci::kernels::detail {

void axpy_scalar(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += s * x[i];
}

std::uint64_t max_abs_scalar(const std::int64_t* x, std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = x[i] < 0 ? static_cast<std::uint64_t>(-x[i]) : static_cast<std::uint64_t>(x[i]);
        if (v > m) m = v;
    }
    return m;
}

}  // namespace abelpci::kernels::detail
