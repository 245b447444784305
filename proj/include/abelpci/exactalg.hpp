#pragma once

// Exact arithmetic in the rational group algebra Q[G] of a finite abelian
// group: dense coefficient vectors over the group's canonical enumeration.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "abelpci/groupcore.hpp"
#include "abelpci/rational.hpp"

namespace abelpci {

using GroupPtr = std::shared_ptr<const AbelianGroup>;

GroupPtr make_group(const AbelianGroupSpec& spec);
GroupPtr make_group(const PrimaryGroupSpec& spec);

class AlgebraElement {
public:
    // The zero element.
    explicit AlgebraElement(GroupPtr group);
    // coeffs.size() must equal |G|.
    AlgebraElement(GroupPtr group, std::vector<Rational> coeffs);

    static AlgebraElement identity(GroupPtr group);
    static AlgebraElement basis(GroupPtr group, const GroupElement& g);
    // H^ = (1/|H|) sum_{h in H} h for H given by sorted or unsorted indices.
    static AlgebraElement subgroup_average(GroupPtr group, const std::vector<std::size_t>& members);

    const AbelianGroup& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& coefficient(const GroupElement& g) const;

    bool is_zero() const noexcept;
    bool has_same_group(const AlgebraElement& other) const noexcept;

    // g * this.
    AlgebraElement translate(const GroupElement& g) const;
    AlgebraElement translate_index(std::size_t g) const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& s);
    AlgebraElement operator-() const;

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }

    // Exact entrywise equality; elements of different groups compare unequal.
    bool operator==(const AlgebraElement& other) const;

private:
    void require_same_group(const AlgebraElement& other) const;

    GroupPtr group_;
    std::vector<Rational> coeffs_;
};

// Lexicographic order on coefficient vectors; the canonical normalization
// used for set comparisons.
bool canonical_less(const AlgebraElement& a, const AlgebraElement& b);

// Group-algebra product. Uses the integer kernels when both operands scale to
// small integers, the rational reference path otherwise.
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);
// Reference product: direct double sum in rationals.
AlgebraElement convolve_rational(const AlgebraElement& a, const AlgebraElement& b);

// e_z = (1 + z + ... + z^{p-1}) / p, p the prime of a primary group.
AlgebraElement e_of(GroupPtr group, const GroupElement& z);
// e'_z = 1 - e_z.
AlgebraElement e_prime_of(GroupPtr group, const GroupElement& z);

// K^ * (1 - e_z) with K generated by kernel_gens, or K^ when primed is empty.
struct FactoredIdempotent {
    std::vector<GroupElement> kernel_gens;
    std::optional<GroupElement> primed;
};

// Throws InvariantError when z lies in K or z^p does not (the expansion would
// not be an idempotent).
AlgebraElement expand_factored(GroupPtr group, const FactoredIdempotent& f);

bool is_idempotent(const AlgebraElement& a);
bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b);

// Sorted indices of {g : g a = a}.
std::vector<std::size_t> stabilizer(const AlgebraElement& a);

struct KernelInfo {
    std::vector<std::size_t> kernel;   // sorted element indices of K
    std::uint64_t quotient_order = 1;  // |G| / |K|
    std::optional<unsigned> field_index;  // r with |G/K| = p^r, p-groups only
    std::uint64_t dimension = 0;       // dim_Q Q[G] e
};

// For a primitive central idempotent e: kernel K, |G/K| and dim Q[G]e by
// exact elimination. InputError if e is not idempotent; InvariantError if
// dim != phi(|G/K|).
KernelInfo kernel_and_field(const AlgebraElement& e);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

// Lifts an element of Q[H] into Q[G] along an index map H -> G.
AlgebraElement lift(const AlgebraElement& a, GroupPtr target,
                    const std::vector<std::size_t>& index_map);

}  // namespace abelpci
