#pragma once

// Independent ground truth: rational PCIs from complex characters via
// Ramanujan sums, element-order census, and the cyclotomic-field multiplicity
// formulas for Q[G].

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelpci/exactalg.hpp"
#include "abelpci/groupcore.hpp"

namespace abelpci {

// chi_t(g) = prod_i zeta_{d_i}^{t_i g_i}; same layout as GroupElement.
struct CharacterIndex {
    std::vector<std::uint64_t> t;
    auto operator<=>(const CharacterIndex&) const = default;
};

std::vector<CharacterIndex> dual_characters(const AbelianGroup& group);
std::uint64_t character_order(const AbelianGroup& group, const CharacterIndex& chi);

// e_Q(chi) = (1/|G|) sum_g c_m(a(g)) g, m = ord(chi), zeta_m^{a(g)} = chi(g^{-1}).
AlgebraElement rational_pci_of_character(GroupPtr group, const CharacterIndex& chi);

struct OraclePci {
    AlgebraElement element;
    CharacterIndex representative;  // least member of the Galois orbit
    std::uint64_t character_order = 1;
    std::size_t orbit_size = 1;
};

// One entry per Galois orbit of characters, ordered by least representative.
// Throws InvariantError when two characters of one orbit give different
// idempotents, InputError when |G| > max_order.
std::vector<OraclePci> oracle_pci_set(GroupPtr group, std::uint64_t max_order = 4096);

// Element order -> number of elements of that order.
std::map<std::uint64_t, std::uint64_t> order_census(const AbelianGroup& group);

struct WedderburnRow {
    unsigned r = 0;
    unsigned a = 0;   // a_r: cyclic factors of order p^r
    unsigned b = 0;   // b_r = a_r + ... + a_n
    unsigned c = 0;   // c_r = sum_{s<r} s a_s
    Integer elements_of_order;     // |E_r(G)|
    Integer census_coefficient;    // |E_r| / phi(p^r)
    Integer formula_coefficient;   // p^{c_r + (r-1)(b_r-1)} (p^{b_r}-1)/(p-1)
    Integer statement_coefficient; // same with exponent c_r + (r-1) b_{r-1}
    Integer power_part;            // p^{c_r + (r-1)(b_r-1)}
    Integer coprime_part;          // 1 + p + ... + p^{b_r - 1}
    bool agree = false;            // formula == census
    bool statement_agree = false;  // statement variant == census
    bool factorization_ok = false; // power * coprime == formula == quotient form, p does not divide coprime
};

struct WedderburnProfile {
    PrimaryGroupSpec spec{2, {}};
    std::vector<WedderburnRow> rows;  // r = 0..n
    bool census_sums_to_order = false;
};

// Throws VerificationFailure if the formula disagrees with the census for any r.
WedderburnProfile wedderburn_profile(const PrimaryGroupSpec& spec);

struct PciSetComparison {
    bool equal = false;
    std::optional<AlgebraElement> witness;
    // 0: witness only in the first set, 1: only in the second.
    int witness_side = -1;
    std::string detail;
};

// Multiset equality after canonical normalization.
PciSetComparison compare_pci_sets(const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b);

}  // namespace abelpci
