#include "abelpci/cyclotome.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"

namespace abelpci {

namespace {

using IntPoly = std::vector<Integer>;

// Exact division by a monic integer polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw InvariantError("cyclotomic division: degree too small");
    IntPoly quot(num.size() - dn);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer c = num[i + dn];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dn; ++j) {
        if (num[j] != 0) throw InvariantError("cyclotomic division left a remainder");
    }
    return quot;
}

IntPoly compute_cyclotomic(std::uint64_t m) {
    IntPoly poly(m + 1);
    poly[0] = -1;
    poly[m] = 1;
    for (auto d : divisors(m)) {
        if (d < m) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

// In-place reduction of a rational polynomial modulo Phi_m; returns phi(m) coefficients.
std::vector<Rational> reduce_mod_phi(std::uint64_t m, std::vector<Rational> poly) {
    const auto& phi_poly = cyclotomic_polynomial(m);
    const std::size_t deg = phi_poly.size() - 1;
    Rational c;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) continue;
        c = poly[i];
        const std::size_t base = i - deg;
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi_poly[j] != 0) poly[base + j] -= c * phi_poly[j];
        }
        poly[i] = 0;
    }
    poly.resize(deg);
    return poly;
}

std::uint64_t mod_reduce(std::int64_t k, std::uint64_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((k % mm) + mm) % mm);
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m) {
    if (m == 0) throw InputError("cyclotomic modulus must be positive");
    static std::recursive_mutex mutex;
    static std::map<std::uint64_t, IntPoly> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto poly = compute_cyclotomic(m);
    return cache.emplace(m, std::move(poly)).first->second;
}

// ---------------------------------------------------------------------------
// CycloNumber

CycloNumber::CycloNumber(std::uint64_t m) : m_(m) {
    if (m == 0) throw InputError("cyclotomic modulus must be positive");
    coeffs_.resize(euler_phi(m));
}

CycloNumber::CycloNumber(std::uint64_t m, std::vector<Rational> poly) : m_(m) {
    if (m == 0) throw InputError("cyclotomic modulus must be positive");
    const auto deg = euler_phi(m);
    if (poly.size() < deg) poly.resize(deg);
    coeffs_ = reduce_mod_phi(m, std::move(poly));
}

CycloNumber CycloNumber::rational(std::uint64_t m, const Rational& q) {
    CycloNumber out(m);
    out.coeffs_[0] = q;
    return out;
}

CycloNumber CycloNumber::zeta_power(std::uint64_t m, std::int64_t k) {
    const auto e = mod_reduce(k, m);
    std::vector<Rational> poly(std::max<std::uint64_t>(e + 1, euler_phi(m)));
    poly[e] = 1;
    return CycloNumber(m, std::move(poly));
}

bool CycloNumber::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CycloNumber::is_rational() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational CycloNumber::rational_value() const {
    if (!is_rational()) throw InvariantError("cyclotomic number is not rational");
    return coeffs_[0];
}

void CycloNumber::require_same_modulus(const CycloNumber& other) const {
    if (m_ != other.m_) {
        throw InputError("cyclotomic modulus mismatch: " + std::to_string(m_) + " vs " +
                         std::to_string(other.m_));
    }
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
    require_same_modulus(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) {
    require_same_modulus(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    a.require_same_modulus(b);
    const auto& x = a.coeffs_;
    const auto& y = b.coeffs_;
    std::vector<Rational> prod(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (sgn(y[j]) != 0) prod[i + j] += x[i] * y[j];
        }
    }
    return CycloNumber(a.m_, std::move(prod));
}

CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b) { return a * b; }

CycloNumber galois_apply(std::int64_t k, const CycloNumber& a) {
    const auto m = a.modulus();
    const auto kk = mod_reduce(k, m);
    if (std::gcd(kk, m) != 1) {
        throw InputError("galois_apply: gcd(" + std::to_string(k) + ", " + std::to_string(m) + ") != 1");
    }
    std::vector<Rational> poly(std::max<std::uint64_t>(m, a.coeffs().size()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (sgn(a.coeffs()[i]) != 0) poly[(i * kk) % m] += a.coeffs()[i];
    }
    return CycloNumber(m, std::move(poly));
}

CycloNumber embed_cyclo(const CycloNumber& a, std::uint64_t n) {
    const auto m = a.modulus();
    if (n % m != 0) {
        throw InputError("embed_cyclo: " + std::to_string(m) + " does not divide " + std::to_string(n));
    }
    const auto step = n / m;
    std::vector<Rational> poly(std::max<std::uint64_t>(a.coeffs().size() * step, euler_phi(n)));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) poly[i * step] = a.coeffs()[i];
    return CycloNumber(n, std::move(poly));
}

std::int64_t ramanujan_sum(std::uint64_t m, std::int64_t t) {
    if (m == 0) throw InputError("ramanujan_sum: m must be positive");
    const auto d = std::gcd(mod_reduce(t, m), m);  // gcd(0, m) = m
    const auto q = m / d;
    return static_cast<std::int64_t>(mobius(q)) * static_cast<std::int64_t>(euler_phi(m) / euler_phi(q));
}

std::int64_t ramanujan_sum_by_summation(std::uint64_t m, std::int64_t t) {
    CycloNumber acc(m);
    const auto tt = mod_reduce(t, m);
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) == 1) acc += CycloNumber::zeta_power(m, static_cast<std::int64_t>((tt * k) % m));
    }
    const auto v = acc.rational_value();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
        throw InvariantError("Ramanujan sum is not a machine integer");
    }
    return v.get_num().get_si();
}

// ---------------------------------------------------------------------------
// CycloAlgebraElement

CycloAlgebraElement::CycloAlgebraElement(GroupPtr group, std::uint64_t m)
    : group_(std::move(group)), m_(m), coeffs_(group_->order(), CycloNumber(m)) {}

CycloAlgebraElement::CycloAlgebraElement(GroupPtr group, std::uint64_t m, std::vector<CycloNumber> coeffs)
    : group_(std::move(group)), m_(m), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order()) throw InputError("coefficient count differs from group order");
    for (const auto& c : coeffs_) {
        if (c.modulus() != m_) throw InputError("coefficients must share one cyclotomic modulus");
    }
}

CycloAlgebraElement CycloAlgebraElement::identity(GroupPtr group, std::uint64_t m) {
    CycloAlgebraElement out(std::move(group), m);
    out.coeffs_[0] = CycloNumber::rational(m, 1);
    return out;
}

CycloAlgebraElement CycloAlgebraElement::from_rational(const AlgebraElement& a, std::uint64_t m) {
    CycloAlgebraElement out(a.group_ptr(), m);
    for (std::size_t i = 0; i < a.size(); ++i) out.coeffs_[i] = CycloNumber::rational(m, a[i]);
    return out;
}

bool CycloAlgebraElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloNumber& c) { return c.is_zero(); });
}

bool CycloAlgebraElement::is_rational() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloNumber& c) { return c.is_rational(); });
}

AlgebraElement CycloAlgebraElement::to_rational() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.rational_value());
    return AlgebraElement(group_, std::move(out));
}

CycloAlgebraElement CycloAlgebraElement::translate_index(std::size_t g) const {
    CycloAlgebraElement out(group_, m_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[group_->mul_index(g, i)] = coeffs_[i];
    return out;
}

void CycloAlgebraElement::require_compatible(const CycloAlgebraElement& other) const {
    if (m_ != other.m_) throw InputError("cyclotomic modulus mismatch");
    if (group_ != other.group_ && !(*group_ == *other.group_)) throw InputError("group mismatch");
}

CycloAlgebraElement& CycloAlgebraElement::operator+=(const CycloAlgebraElement& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycloAlgebraElement& CycloAlgebraElement::operator-=(const CycloAlgebraElement& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

bool CycloAlgebraElement::operator==(const CycloAlgebraElement& other) const {
    if (m_ != other.m_) return false;
    if (group_ != other.group_ && !(*group_ == *other.group_)) return false;
    return coeffs_ == other.coeffs_;
}

CycloAlgebraElement cyclo_convolve(const CycloAlgebraElement& a, const CycloAlgebraElement& b) {
    if (a.modulus() != b.modulus()) throw InputError("cyclotomic modulus mismatch");
    if (a.group_ptr() != b.group_ptr() && !(a.group() == b.group())) throw InputError("group mismatch");
    const auto& group = a.group();
    CycloAlgebraElement out(a.group_ptr(), a.modulus());
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (a[g].is_zero()) continue;
        for (std::size_t h = 0; h < b.size(); ++h) {
            if (b[h].is_zero()) continue;
            out[group.mul_index(g, h)] += a[g] * b[h];
        }
    }
    return out;
}

bool is_idempotent(const CycloAlgebraElement& a) { return cyclo_convolve(a, a) == a; }

bool are_orthogonal(const CycloAlgebraElement& a, const CycloAlgebraElement& b) {
    return cyclo_convolve(a, b).is_zero();
}

bool spans_rank_one(const CycloAlgebraElement& e) {
    std::size_t pivot = e.size();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot == e.size()) return false;
    for (std::size_t g = 0; g < e.size(); ++g) {
        const auto t = e.translate_index(g);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!(t[i] * e[pivot] == t[pivot] * e[i])) return false;
        }
    }
    return true;
}

CycloAlgebraElement lift(const CycloAlgebraElement& a, GroupPtr target,
                         const std::vector<std::size_t>& index_map, std::uint64_t n) {
    if (index_map.size() != a.size()) throw InputError("lift: index map size mismatch");
    CycloAlgebraElement out(std::move(target), n);
    for (std::size_t i = 0; i < a.size(); ++i) out[index_map.at(i)] += embed_cyclo(a[i], n);
    return out;
}

}  // namespace abelpci
