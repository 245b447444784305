#pragma once

// Integer kernels behind the exact group-algebra product.
//
// Rational algebra elements whose coefficients share a small common
// denominator are scaled to int64 numerators and multiplied here; the caller
// guarantees the operand bounds below, so every kernel is exact. Each kernel
// has a scalar reference and SIMD variants chosen at runtime; all variants
// must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace abelpci::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
std::vector<Isa> available_isas();

// Operands of axpy must lie in [-kOperandLimit, kOperandLimit].
inline constexpr std::int64_t kOperandLimit = (std::int64_t{1} << 31) - 1;

struct KernelTable {
    Isa isa;
    // y[i] += s * x[i]. Needs |s|, |x[i]| <= kOperandLimit and no int64
    // overflow in y.
    void (*axpy)(std::int64_t s, const std::int64_t* x, std::int64_t* y, std::size_t n);
    // max |x[i]|; x[i] != INT64_MIN.
    std::uint64_t (*max_abs)(const std::int64_t* x, std::size_t n);
};

const KernelTable& table(Isa isa);

// Best available ISA unless overridden with set_active().
const KernelTable& active() noexcept;
void set_active(Isa isa);
void reset_active() noexcept;

// out = a * b in Z[C_{n_1} x ... x C_{n_k}], dense mixed-radix layout with the
// last factor contiguous. out must be zero-filled and sized like a and b.
// Requires sum|a| * max|b| < 2^62 and both operands within kOperandLimit.
void group_convolve(std::span<const std::uint64_t> moduli, std::span<const std::int64_t> a,
                    std::span<const std::int64_t> b, std::span<std::int64_t> out,
                    const KernelTable& kt = active());

// True when group_convolve's operand bounds hold for these operands.
bool convolve_bounds_ok(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                        const KernelTable& kt = active());

}  // namespace abelpci::kernels
