#pragma once

// Slow, independent ground truth for tests. Only the coordinate layout is
// taken from the library (so coefficient vectors line up); arithmetic,
// products and idempotents are recomputed here from scratch.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "abelpci/groupcore.hpp"

namespace brute {

using Q = mpq_class;
using Vec = std::vector<Q>;

struct Group {
    std::vector<std::uint64_t> mod;
    std::size_t n = 1;

    explicit Group(const abelpci::AbelianGroup& g) {
        for (const auto& f : g.factors()) mod.push_back(f.order);
        for (auto m : mod) n *= m;
    }

    std::vector<std::uint64_t> decode(std::size_t idx) const {
        std::vector<std::uint64_t> d(mod.size());
        for (std::size_t i = mod.size(); i-- > 0;) {
            d[i] = idx % mod[i];
            idx /= mod[i];
        }
        return d;
    }
    std::size_t encode(const std::vector<std::uint64_t>& d) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < mod.size(); ++i) idx = idx * mod[i] + d[i] % mod[i];
        return idx;
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
        auto x = decode(a);
        auto y = decode(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % mod[i];
        return encode(x);
    }
    std::size_t pow(std::size_t a, std::uint64_t k) const {
        auto x = decode(a);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] * (k % mod[i]) % mod[i];
        return encode(x);
    }
    std::uint64_t order_of(std::size_t a) const {
        std::uint64_t k = 1;
        std::size_t x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }
    std::uint64_t exponent() const {
        std::uint64_t e = 1;
        for (auto m : mod) e = std::lcm(e, m);
        return e;
    }
};

inline Vec product(const Group& g, const Vec& a, const Vec& b) {
    Vec out(g.n, 0);
    for (std::size_t i = 0; i < g.n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < g.n; ++j) {
            if (b[j] != 0) out[g.mul(i, j)] += a[i] * b[j];
        }
    }
    return out;
}

inline Vec average(const Group& g, const std::vector<std::size_t>& members) {
    Vec out(g.n, 0);
    for (auto m : members) out[m] = Q(1, static_cast<unsigned long>(members.size()));
    return out;
}

inline Vec identity(const Group& g) {
    Vec out(g.n, 0);
    out[0] = 1;
    return out;
}

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

// Kernels of all characters chi_t(g) = exp(2 pi i sum t_k g_k / mod_k).
inline std::set<std::vector<std::size_t>> character_kernels(const Group& g) {
    const auto e = g.exponent();
    std::set<std::vector<std::size_t>> out;
    for (std::size_t t = 0; t < g.n; ++t) {
        const auto tv = g.decode(t);
        std::vector<std::size_t> ker;
        for (std::size_t x = 0; x < g.n; ++x) {
            const auto xv = g.decode(x);
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < xv.size(); ++k) s = (s + tv[k] * xv[k] % g.mod[k] * (e / g.mod[k])) % e;
            if (s == 0) ker.push_back(x);
        }
        out.insert(std::move(ker));
    }
    return out;
}

struct Pci {
    Vec e;
    std::uint64_t quotient_order = 1;
};

// e_K = K^ prod_q (1 - M_q^), M_q = {g : g^q in K}, q | [G:K] prime.
inline std::vector<Pci> rational_pcis(const Group& g) {
    std::vector<Pci> out;
    for (const auto& ker : character_kernels(g)) {
        const std::uint64_t idx = g.n / ker.size();
        Vec e = average(g, ker);
        for (std::uint64_t q = 2; q <= idx; ++q) {
            if (idx % q || !is_prime(q)) continue;
            std::vector<std::size_t> m;
            for (std::size_t x = 0; x < g.n; ++x) {
                if (std::binary_search(ker.begin(), ker.end(), g.pow(x, q))) m.push_back(x);
            }
            Vec f = identity(g);
            const Vec mh = average(g, m);
            for (std::size_t i = 0; i < g.n; ++i) f[i] -= mh[i];
            e = product(g, e, f);
        }
        out.push_back({std::move(e), idx});
    }
    std::sort(out.begin(), out.end(), [](const Pci& a, const Pci& b) { return a.e < b.e; });
    return out;
}

inline std::map<std::uint64_t, std::uint64_t> order_census(const Group& g) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::size_t x = 0; x < g.n; ++x) ++out[g.order_of(x)];
    return out;
}

inline std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace brute
