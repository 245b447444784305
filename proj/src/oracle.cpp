#include "abelpci/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "abelpci/cyclotome.hpp"
#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"

namespace abelpci {

namespace {

Integer int_pow(std::uint64_t p, unsigned e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, e);
    return out;
}

CharacterIndex scale(const AbelianGroup& group, const CharacterIndex& chi, std::uint64_t k) {
    CharacterIndex out = chi;
    const auto& f = group.factors();
    for (std::size_t i = 0; i < f.size(); ++i) out.t[i] = (chi.t[i] * (k % f[i].order)) % f[i].order;
    return out;
}

}  // namespace

std::vector<CharacterIndex> dual_characters(const AbelianGroup& group) {
    std::vector<CharacterIndex> out;
    out.reserve(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) out.push_back({group.element_at(i).exps});
    return out;
}

std::uint64_t character_order(const AbelianGroup& group, const CharacterIndex& chi) {
    if (!group.contains(GroupElement{chi.t})) throw InputError("character index out of range");
    std::uint64_t m = 1;
    const auto& f = group.factors();
    for (std::size_t i = 0; i < f.size(); ++i) m = std::lcm(m, f[i].order / std::gcd(f[i].order, chi.t[i]));
    return m;
}

AlgebraElement rational_pci_of_character(GroupPtr group, const CharacterIndex& chi) {
    const auto m = character_order(*group, chi);
    const auto L = group->exponent();
    const auto& f = group->factors();
    std::vector<std::uint64_t> weight(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) weight[i] = (chi.t[i] * (L / f[i].order)) % L;

    std::unordered_map<std::uint64_t, Rational> cache;
    AlgebraElement out(group);
    const auto order = group->order();
    for (std::size_t gi = 0; gi < order; ++gi) {
        const auto g = group->element_at(gi);
        std::uint64_t s = 0;  // chi(g) = zeta_L^s
        for (std::size_t i = 0; i < f.size(); ++i) {
            s = (s + static_cast<std::uint64_t>((static_cast<unsigned __int128>(weight[i]) * g.exps[i]) % L)) % L;
        }
        const std::uint64_t inv = (L - s) % L;  // chi(g^{-1})
        const std::uint64_t a = inv / (L / m);  // exact: ord(chi) = m
        auto it = cache.find(a);
        if (it == cache.end()) {
            it = cache.emplace(a, make_rational(ramanujan_sum(m, static_cast<std::int64_t>(a)), order)).first;
        }
        out[gi] = it->second;
    }
    return out;
}

std::vector<OraclePci> oracle_pci_set(GroupPtr group, std::uint64_t max_order) {
    if (group->order() > max_order) {
        throw InputError("group order " + std::to_string(group->order()) + " exceeds the cap " +
                         std::to_string(max_order));
    }
    std::vector<char> seen(group->order(), 0);
    std::vector<OraclePci> out;
    for (std::size_t ti = 0; ti < group->order(); ++ti) {
        if (seen[ti]) continue;
        CharacterIndex chi{group->element_at(ti).exps};
        const auto m = character_order(*group, chi);
        OraclePci entry{rational_pci_of_character(group, chi), chi, m, 0};
        for (std::uint64_t k = 1; k <= m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            const auto other = scale(*group, chi, k);
            const auto oi = group->index_of(GroupElement{other.t});
            if (seen[oi]) continue;
            seen[oi] = 1;
            ++entry.orbit_size;
            if (oi != ti && !(rational_pci_of_character(group, other) == entry.element)) {
                throw InvariantError("characters " + group->format(GroupElement{chi.t}) + " and " +
                                     group->format(GroupElement{other.t}) +
                                     " share a Galois orbit but give different idempotents");
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::map<std::uint64_t, std::uint64_t> order_census(const AbelianGroup& group) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::size_t i = 0; i < group.order(); ++i) ++out[group.element_order(group.element_at(i))];
    return out;
}

WedderburnProfile wedderburn_profile(const PrimaryGroupSpec& spec) {
    const auto p = spec.prime();
    const unsigned n = spec.max_exponent();
    const AbelianGroup group(spec);
    const auto census = order_census(group);

    WedderburnProfile profile;
    profile.spec = spec;
    Integer total = 0;
    for (unsigned r = 0; r <= n; ++r) {
        WedderburnRow row;
        row.r = r;
        row.a = spec.multiplicity_of(r);
        for (unsigned s = r; s <= n; ++s) row.b += spec.multiplicity_of(s);
        for (unsigned s = 1; s < r; ++s) row.c += s * spec.multiplicity_of(s);

        const auto pr = ipow(p, r);
        auto it = census.find(pr);
        row.elements_of_order = it == census.end() ? 0 : it->second;
        const Integer phi_pr = euler_phi(pr);
        if (row.elements_of_order % phi_pr != 0) {
            throw InvariantError("|E_r| not divisible by phi(p^r)");
        }
        row.census_coefficient = row.elements_of_order / phi_pr;
        total += row.census_coefficient * phi_pr;

        if (r == 0) {
            row.power_part = 1;
            row.coprime_part = 1;
            row.formula_coefficient = 1;
            row.statement_coefficient = 1;
            row.factorization_ok = true;
        } else {
            unsigned b_prev = 0;  // b_{r-1}
            for (unsigned s = r - 1; s <= n; ++s) b_prev += spec.multiplicity_of(s);
            row.power_part = int_pow(p, row.c + (r - 1) * (row.b - 1));
            row.coprime_part = (int_pow(p, row.b) - 1) / Integer(p - 1);
            row.formula_coefficient = row.power_part * row.coprime_part;
            row.statement_coefficient = int_pow(p, row.c + (r - 1) * b_prev) * row.coprime_part;

            // |E_r| / phi(p^r) with |E_r| = p^{c_r + (r-1) b_r} (p^{b_r} - 1).
            const Integer quotient_form =
                int_pow(p, row.c + (r - 1) * row.b) * (int_pow(p, row.b) - 1) / phi_pr;
            Integer geometric = 0;
            for (unsigned k = 0; k < row.b; ++k) geometric += int_pow(p, k);
            row.factorization_ok = quotient_form == row.formula_coefficient && geometric == row.coprime_part &&
                                   row.coprime_part % p != 0;
        }
        row.agree = row.formula_coefficient == row.census_coefficient;
        row.statement_agree = row.statement_coefficient == row.census_coefficient;
        profile.rows.push_back(std::move(row));
    }
    profile.census_sums_to_order = total == Integer(std::to_string(spec.order()));

    for (const auto& row : profile.rows) {
        if (!row.agree) {
            throw VerificationFailure("Wedderburn coefficient for r=" + std::to_string(row.r) + " of " +
                                      spec.to_string() + ": formula " + row.formula_coefficient.get_str() +
                                      " vs census " + row.census_coefficient.get_str());
        }
    }
    return profile;
}

PciSetComparison compare_pci_sets(const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b) {
    PciSetComparison result;
    if (!a.empty() && !b.empty() && !a.front().has_same_group(b.front())) {
        result.detail = "sets live in different group algebras";
        return result;
    }
    std::vector<const AlgebraElement*> sa;
    std::vector<const AlgebraElement*> sb;
    for (const auto& e : a) sa.push_back(&e);
    for (const auto& e : b) sb.push_back(&e);
    auto less = [](const AlgebraElement* x, const AlgebraElement* y) { return canonical_less(*x, *y); };
    std::sort(sa.begin(), sa.end(), less);
    std::sort(sb.begin(), sb.end(), less);

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (*sa[i] == *sb[j]) {
            ++i;
            ++j;
        } else if (canonical_less(*sa[i], *sb[j])) {
            result.witness = *sa[i];
            result.witness_side = 0;
            break;
        } else {
            result.witness = *sb[j];
            result.witness_side = 1;
            break;
        }
    }
    if (!result.witness) {
        if (i < sa.size()) {
            result.witness = *sa[i];
            result.witness_side = 0;
        } else if (j < sb.size()) {
            result.witness = *sb[j];
            result.witness_side = 1;
        }
    }
    result.equal = !result.witness;
    result.detail = result.equal ? "equal (" + std::to_string(a.size()) + " members)"
                                 : "unequal: witness only in " + std::string(result.witness_side == 0 ? "first" : "second") +
                                       " set (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " members)";
    return result;
}

}  // namespace abelpci
