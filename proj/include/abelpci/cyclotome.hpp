#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m) = Q[x]/(Phi_m), and group
// algebras over them. Elements are coefficient vectors over the power basis
// 1, zeta, ..., zeta^{phi(m)-1}.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelpci/exactalg.hpp"
#include "abelpci/rational.hpp"

namespace abelpci {

// Phi_m, coefficients from the constant term up; monic with integer
// coefficients. Memoized; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m);

class CycloNumber {
public:
    // Zero of Q(zeta_m).
    explicit CycloNumber(std::uint64_t m);
    // Polynomial in zeta of any length; reduced modulo Phi_m.
    CycloNumber(std::uint64_t m, std::vector<Rational> poly);

    static CycloNumber rational(std::uint64_t m, const Rational& q);
    // zeta_m^k for any integer k.
    static CycloNumber zeta_power(std::uint64_t m, std::int64_t k);

    std::uint64_t modulus() const noexcept { return m_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    // InvariantError unless is_rational().
    Rational rational_value() const;

    CycloNumber& operator+=(const CycloNumber& other);
    CycloNumber& operator-=(const CycloNumber& other);
    CycloNumber& operator*=(const Rational& s);
    CycloNumber operator-() const;

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const Rational& s) { return a *= s; }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);

    bool operator==(const CycloNumber& other) const = default;

private:
    void require_same_modulus(const CycloNumber& other) const;

    std::uint64_t m_;
    std::vector<Rational> coeffs_;
};

CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b);

// The automorphism zeta -> zeta^k; InputError unless gcd(k, m) = 1.
CycloNumber galois_apply(std::int64_t k, const CycloNumber& a);

// Q(zeta_m) -> Q(zeta_n) for m | n, zeta_m -> zeta_n^{n/m}.
CycloNumber embed_cyclo(const CycloNumber& a, std::uint64_t n);

// c_m(t) = sum over k in (Z/m)^* of zeta_m^{tk}, via mu(m/d) phi(m) / phi(m/d),
// d = gcd(t, m).
std::int64_t ramanujan_sum(std::uint64_t m, std::int64_t t);
// Same value by summing the roots in Q(zeta_m).
std::int64_t ramanujan_sum_by_summation(std::uint64_t m, std::int64_t t);

// Element of Q(zeta_m)[G].
class CycloAlgebraElement {
public:
    CycloAlgebraElement(GroupPtr group, std::uint64_t m);
    CycloAlgebraElement(GroupPtr group, std::uint64_t m, std::vector<CycloNumber> coeffs);

    static CycloAlgebraElement identity(GroupPtr group, std::uint64_t m);
    static CycloAlgebraElement from_rational(const AlgebraElement& a, std::uint64_t m);

    const AbelianGroup& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    std::uint64_t modulus() const noexcept { return m_; }
    const std::vector<CycloNumber>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const CycloNumber& operator[](std::size_t i) const { return coeffs_[i]; }
    CycloNumber& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    // InvariantError unless every coefficient is rational.
    AlgebraElement to_rational() const;

    CycloAlgebraElement translate_index(std::size_t g) const;

    CycloAlgebraElement& operator+=(const CycloAlgebraElement& other);
    CycloAlgebraElement& operator-=(const CycloAlgebraElement& other);
    friend CycloAlgebraElement operator+(CycloAlgebraElement a, const CycloAlgebraElement& b) {
        return a += b;
    }
    friend CycloAlgebraElement operator-(CycloAlgebraElement a, const CycloAlgebraElement& b) {
        return a -= b;
    }

    bool operator==(const CycloAlgebraElement& other) const;

private:
    void require_compatible(const CycloAlgebraElement& other) const;

    GroupPtr group_;
    std::uint64_t m_;
    std::vector<CycloNumber> coeffs_;
};

CycloAlgebraElement cyclo_convolve(const CycloAlgebraElement& a, const CycloAlgebraElement& b);
bool is_idempotent(const CycloAlgebraElement& a);
bool are_orthogonal(const CycloAlgebraElement& a, const CycloAlgebraElement& b);

// True when e != 0 and every translate g e is a Q(zeta_m)-multiple of e,
// i.e. Q(zeta_m)[G] e has dimension 1. Uses 2x2 minors, no field inversion.
bool spans_rank_one(const CycloAlgebraElement& e);

// Lifts along a group index map and a field embedding Q(zeta_m) -> Q(zeta_n).
CycloAlgebraElement lift(const CycloAlgebraElement& a, GroupPtr target,
                         const std::vector<std::size_t>& index_map, std::uint64_t n);

}  // namespace abelpci
