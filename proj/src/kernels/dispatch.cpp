#include <atomic>

#include "abelpci/errors.hpp"
#include "abelpci/kernels.hpp"
#include "kernels/kernels_impl.hpp"

namespace abelpci::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &detail::axpy_scalar, &detail::max_abs_scalar};
#if defined(ABELPCI_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::Avx2, &detail::axpy_avx2, &detail::max_abs_avx2};
#endif
#if defined(ABELPCI_HAVE_NEON_TU)
constexpr KernelTable kNeon{Isa::Neon, &detail::axpy_neon, &detail::max_abs_neon};
#endif

const KernelTable* best_table() noexcept {
#if defined(ABELPCI_HAVE_AVX2_TU)
    if (isa_available(Isa::Avx2)) return &kAvx2;
#endif
#if defined(ABELPCI_HAVE_NEON_TU)
    if (isa_available(Isa::Neon)) return &kNeon;
#endif
    return &kScalar;
}

std::atomic<const KernelTable*>& active_slot() noexcept {
    static std::atomic<const KernelTable*> slot{best_table()};
    return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(ABELPCI_HAVE_AVX2_TU)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(ABELPCI_HAVE_NEON_TU)
            return true;  // mandatory on aarch64
#else
            return false;
#endif
    }
    return false;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (isa_available(isa)) out.push_back(isa);
    }
    return out;
}

const KernelTable& table(Isa isa) {
    if (!isa_available(isa)) {
        throw InputError("kernel ISA not available: " + std::string(isa_name(isa)));
    }
    switch (isa) {
#if defined(ABELPCI_HAVE_AVX2_TU)
        case Isa::Avx2: return kAvx2;
#endif
#if defined(ABELPCI_HAVE_NEON_TU)
        case Isa::Neon: return kNeon;
#endif
        default: return kScalar;
    }
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) { active_slot().store(&table(isa), std::memory_order_release); }

void reset_active() noexcept { active_slot().store(best_table(), std::memory_order_release); }

bool convolve_bounds_ok(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                        const KernelTable& kt) {
    if (a.empty() || b.empty()) return true;
    for (auto v : a) {
        if (v < -kOperandLimit || v > kOperandLimit) return false;
    }
    for (auto v : b) {
        if (v < -kOperandLimit) return false;
    }
    const auto max_b = kt.max_abs(b.data(), b.size());
    if (max_b > static_cast<std::uint64_t>(kOperandLimit)) return false;
    unsigned __int128 sum_a = 0;
    for (auto v : a) sum_a += static_cast<std::uint64_t>(v < 0 ? -v : v);
    return sum_a * max_b < (static_cast<unsigned __int128>(1) << 62);
}

void group_convolve(std::span<const std::uint64_t> moduli, std::span<const std::int64_t> a,
                    std::span<const std::int64_t> b, std::span<std::int64_t> out,
                    const KernelTable& kt) {
    std::size_t order = 1;
    for (auto n : moduli) order *= n;
    if (a.size() != order || b.size() != order || out.size() != order) {
        throw InputError("group_convolve: operand size does not match group order");
    }
    if (moduli.empty()) {
        out[0] += a[0] * b[0];
        return;
    }
    const std::size_t inner = moduli.back();
    const std::size_t outer_count = order / inner;
    const auto outer_moduli = moduli.first(moduli.size() - 1);

    // Mixed-radix digits of the outer (all but last factor) index.
    std::vector<std::size_t> g_digits(outer_moduli.size());
    std::vector<std::size_t> h_digits(outer_moduli.size());

    for (std::size_t g = 0; g < order; ++g) {
        const std::int64_t s = a[g];
        if (s == 0) continue;
        const std::size_t g_outer = g / inner;
        const std::size_t shift = g % inner;
        {
            std::size_t rem = g_outer;
            for (std::size_t i = outer_moduli.size(); i-- > 0;) {
                g_digits[i] = rem % outer_moduli[i];
                rem /= outer_moduli[i];
            }
        }
        std::fill(h_digits.begin(), h_digits.end(), 0);
        for (std::size_t h_outer = 0; h_outer < outer_count; ++h_outer) {
            std::size_t target = 0;
            for (std::size_t i = 0; i < outer_moduli.size(); ++i) {
                target = target * outer_moduli[i] + (g_digits[i] + h_digits[i]) % outer_moduli[i];
            }
            const std::int64_t* src = b.data() + h_outer * inner;
            std::int64_t* dst = out.data() + target * inner;
            // dst[(shift + k) mod inner] += s * src[k]
            kt.axpy(s, src, dst + shift, inner - shift);
            if (shift) kt.axpy(s, src + (inner - shift), dst, shift);
            for (std::size_t i = outer_moduli.size(); i-- > 0;) {
                if (++h_digits[i] < outer_moduli[i]) break;
                h_digits[i] = 0;
            }
        }
    }
}

}  // namespace abelpci::kernels
