#pragma once

#include <cstddef>
#include <cstdint>

namespace abelpci::kernels::detail {

void axpy_scalar(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n);
std::uint64_t max_abs_scalar(const std::int64_t* x, std::size_t n);

#if defined(ABELPCI_HAVE_AVX2_TU)
void axpy_avx2(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n);
std::uint64_t max_abs_avx2(const std::int64_t* x, std::size_t n);
#endif

#if defined(ABELPCI_HAVE_NEON_TU)
void axpy_neon(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n);
std::uint64_t max_abs_neon(const std::int64_t* x, std::size_t n);
#endif

}  // namespace abelpci::kernels::detail
