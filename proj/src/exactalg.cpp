#include "abelpci/exactalg.hpp"

#include <algorithm>

#include "abelpci/errors.hpp"
#include "abelpci/kernels.hpp"
#include "abelpci/numtheory.hpp"

namespace abelpci {

GroupPtr make_group(const AbelianGroupSpec& spec) { return std::make_shared<const AbelianGroup>(spec); }
GroupPtr make_group(const PrimaryGroupSpec& spec) { return std::make_shared<const AbelianGroup>(spec); }

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order()) {}

AlgebraElement::AlgebraElement(GroupPtr group, std::vector<Rational> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order()) {
        throw InputError("coefficient vector has " + std::to_string(coeffs_.size()) +
                         " entries, group order is " + std::to_string(group_->order()));
    }
}

AlgebraElement AlgebraElement::identity(GroupPtr group) {
    AlgebraElement e(std::move(group));
    e.coeffs_[0] = 1;
    return e;
}

AlgebraElement AlgebraElement::basis(GroupPtr group, const GroupElement& g) {
    AlgebraElement e(std::move(group));
    e.coeffs_[e.group_->index_of(g)] = 1;
    return e;
}

AlgebraElement AlgebraElement::subgroup_average(GroupPtr group, const std::vector<std::size_t>& members) {
    AlgebraElement e(std::move(group));
    const Rational w = make_rational(1, members.size());
    for (auto i : members) e.coeffs_.at(i) = w;
    return e;
}

const Rational& AlgebraElement::coefficient(const GroupElement& g) const {
    return coeffs_[group_->index_of(g)];
}

bool AlgebraElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool AlgebraElement::has_same_group(const AlgebraElement& other) const noexcept {
    return group_ == other.group_ || *group_ == *other.group_;
}

void AlgebraElement::require_same_group(const AlgebraElement& other) const {
    if (!has_same_group(other)) {
        throw InputError("group mismatch: " + group_->spec().to_string() + " vs " +
                         other.group_->spec().to_string());
    }
}

AlgebraElement AlgebraElement::translate_index(std::size_t g) const {
    AlgebraElement out(group_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) out.coeffs_[group_->mul_index(g, i)] = coeffs_[i];
    }
    return out;
}

AlgebraElement AlgebraElement::translate(const GroupElement& g) const {
    return translate_index(group_->index_of(g));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    require_same_group(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    require_same_group(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
    return has_same_group(other) && coeffs_ == other.coeffs_;
}

bool canonical_less(const AlgebraElement& a, const AlgebraElement& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

// ---------------------------------------------------------------------------
// Products

namespace {

struct Scaled {
    std::vector<std::int64_t> nums;
    Integer den;
};

// Writes a as nums / den with den the lcm of the coefficient denominators;
// fails when anything leaves the kernel operand range.
std::optional<Scaled> scale_to_integers(const AlgebraElement& a) {
    Integer den = 1;
    for (const auto& c : a.coeffs()) {
        if (sgn(c) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        if (den > kernels::kOperandLimit) return std::nullopt;
    }
    Scaled out{std::vector<std::int64_t>(a.size()), den};
    Integer n;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& c = a[i];
        if (sgn(c) == 0) continue;
        n = c.get_num() * (den / c.get_den());
        if (!n.fits_slong_p()) return std::nullopt;
        const long v = n.get_si();
        if (v > kernels::kOperandLimit || v < -kernels::kOperandLimit) return std::nullopt;
        out.nums[i] = v;
    }
    return out;
}

std::vector<std::uint64_t> factor_moduli(const AbelianGroup& g) {
    std::vector<std::uint64_t> m;
    for (const auto& f : g.factors()) m.push_back(f.order);
    return m;
}

}  // namespace

AlgebraElement convolve_rational(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.has_same_group(b)) {
        throw InputError("convolve: group mismatch");
    }
    const auto& group = a.group();
    AlgebraElement out(a.group_ptr());
    Rational term;
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (sgn(a[g]) == 0) continue;
        for (std::size_t h = 0; h < b.size(); ++h) {
            if (sgn(b[h]) == 0) continue;
            term = a[g] * b[h];
            out[group.mul_index(g, h)] += term;
        }
    }
    return out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.has_same_group(b)) {
        throw InputError("convolve: group mismatch");
    }
    auto sa = scale_to_integers(a);
    auto sb = sa ? scale_to_integers(b) : std::nullopt;
    const auto& kt = kernels::active();
    if (!sa || !sb || !kernels::convolve_bounds_ok(sa->nums, sb->nums, kt)) {
        return convolve_rational(a, b);
    }
    std::vector<std::int64_t> prod(a.size(), 0);
    const auto moduli = factor_moduli(a.group());
    kernels::group_convolve(moduli, sa->nums, sb->nums, prod, kt);
    const Integer den = sa->den * sb->den;
    std::vector<Rational> coeffs(a.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] != 0) coeffs[i] = make_rational(Integer(static_cast<long>(prod[i])), den);
    }
    return AlgebraElement(a.group_ptr(), std::move(coeffs));
}

AlgebraElement e_of(GroupPtr group, const GroupElement& z) {
    const auto p = group->prime();
    AlgebraElement out(group);
    const Rational w = make_rational(1, p);
    GroupElement zi = group->identity();
    for (std::uint64_t i = 0; i < p; ++i) {
        out[group->index_of(zi)] += w;
        zi = group->mul(zi, z);
    }
    return out;
}

AlgebraElement e_prime_of(GroupPtr group, const GroupElement& z) {
    return AlgebraElement::identity(group) - e_of(group, z);
}

AlgebraElement expand_factored(GroupPtr group, const FactoredIdempotent& f) {
    const auto kernel = subgroup_closure_indices(*group, f.kernel_gens);
    auto k_hat = AlgebraElement::subgroup_average(group, kernel);
    if (!f.primed) return k_hat;

    const auto& z = *f.primed;
    const auto p = group->prime();
    const auto z_idx = group->index_of(z);
    if (std::binary_search(kernel.begin(), kernel.end(), z_idx)) {
        throw InvariantError("primed element " + group->format(z) + " lies in the kernel subgroup");
    }
    if (!std::binary_search(kernel.begin(), kernel.end(), group->index_of(group->power(z, p)))) {
        throw InvariantError("primed element " + group->format(z) +
                             " has p-th power outside the kernel subgroup");
    }
    // K^ e_z = (1/p) sum_i z^i K^
    AlgebraElement k_e_z(group);
    std::size_t zi = 0;
    for (std::uint64_t i = 0; i < p; ++i) {
        k_e_z += k_hat.translate_index(zi);
        zi = group->mul_index(zi, z_idx);
    }
    k_e_z *= make_rational(1, p);
    return k_hat - k_e_z;
}

bool is_idempotent(const AlgebraElement& a) { return convolve(a, a) == a; }

bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b) {
    return convolve(a, b).is_zero();
}

std::vector<std::size_t> stabilizer(const AlgebraElement& a) {
    const auto& group = a.group();
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < a.size(); ++g) {
        bool fixed = true;
        for (std::size_t i = 0; i < a.size() && fixed; ++i) {
            fixed = a[group.mul_index(g, i)] == a[i];
        }
        if (fixed) out.push_back(g);
    }
    return out;
}

KernelInfo kernel_and_field(const AlgebraElement& e) {
    if (!is_idempotent(e)) throw InputError("kernel_and_field: element is not an idempotent");
    const auto& group = e.group();
    KernelInfo info;
    info.kernel = stabilizer(e);
    info.quotient_order = group.order() / info.kernel.size();

    if (group.is_primary()) {
        const auto p = group.prime();
        unsigned r = 0;
        std::uint64_t q = 1;
        while (q < info.quotient_order) {
            q *= p;
            ++r;
        }
        if (q != info.quotient_order) {
            throw InvariantError("|G/K| is not a power of p");
        }
        info.field_index = r;
    }

    // g e depends only on gK and e is constant on K-cosets, so the translate
    // matrix reduces to coset representatives in both directions.
    std::vector<std::size_t> reps;
    std::vector<char> covered(group.order(), 0);
    for (std::size_t g = 0; g < group.order(); ++g) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (auto k : info.kernel) covered[group.mul_index(g, k)] = 1;
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(reps.size());
    for (auto r : reps) {
        const auto t = e.translate_index(r);
        std::vector<Rational> row;
        row.reserve(reps.size());
        for (auto s : reps) row.push_back(t[s]);
        rows.push_back(std::move(row));
    }
    info.dimension = rational_rank(rows);
    if (info.dimension != euler_phi(info.quotient_order)) {
        throw InvariantError("dim Q[G]e = " + std::to_string(info.dimension) + " but phi(|G/K|) = " +
                             std::to_string(euler_phi(info.quotient_order)) +
                             "; element is not primitive");
    }
    return info;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    // Clear denominators row by row; the rank is unchanged.
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != ncols) throw InputError("rational_rank: ragged matrix");
        Integer l = 1;
        for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> irow(ncols);
        for (std::size_t j = 0; j < ncols; ++j) irow[j] = row[j].get_num() * (l / row[j].get_den());
        m.push_back(std::move(irow));
    }

    const std::size_t nrows = m.size();
    std::size_t rank = 0;
    Integer prev = 1;
    Integer t;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[pivot], m[rank]);
        const Integer& piv = m[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                t = piv * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

AlgebraElement lift(const AlgebraElement& a, GroupPtr target, const std::vector<std::size_t>& index_map) {
    if (index_map.size() != a.size()) throw InputError("lift: index map size mismatch");
    AlgebraElement out(std::move(target));
    for (std::size_t i = 0; i < a.size(); ++i) out[index_map.at(i)] += a[i];
    return out;
}

}  // namespace abelpci
