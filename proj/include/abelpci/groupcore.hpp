#pragma once

// Finite abelian groups given by prime-power partitions.
//
// A p-primary group is written as a product of homocyclic blocks
//   G = prod_i prod_{j=1..l_i} C_{p^{r_i}, j},   r_1 > r_2 > ... > r_m >= 1,
// and every element is stored in the short-generator basis: one residue per
// cyclic factor. Long generators x_{(s,j),a} (with x_{(s,j),a}^p =
// x_{(s,j),a-1}) are views onto that basis through embed_generator().
//
// Factor layout inside a GroupElement: parts by ascending prime; inside a
// part, exponent classes in descending exponent, copies j = 1..l ascending.
// Element enumeration is mixed-radix lexicographic on that layout, the last
// factor varying fastest.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abelpci {

struct ExponentClass {
    unsigned exponent = 0;
    unsigned multiplicity = 0;
    bool operator==(const ExponentClass&) const = default;
};

// One cyclic factor C_{p^s} (copy j of its homocyclic block).
struct CyclicFactor {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    unsigned copy = 0;
    std::uint64_t order = 1;
    bool operator==(const CyclicFactor&) const = default;
};

class PrimaryGroupSpec {
public:
    // Validates primality and strictly decreasing exponents; throws InputError.
    PrimaryGroupSpec(std::uint64_t prime, std::vector<ExponentClass> classes);

    // Builds the spec from a list of exponents with repetition, in any order.
    static PrimaryGroupSpec from_exponents(std::uint64_t prime,
                                           std::vector<unsigned> exponents);

    std::uint64_t prime() const noexcept { return prime_; }
    const std::vector<ExponentClass>& classes() const noexcept { return classes_; }
    // N with |G| = p^N.
    unsigned rank() const noexcept { return rank_; }
    // Largest exponent n (group exponent p^n); 0 for the trivial group.
    unsigned max_exponent() const noexcept;
    std::uint64_t order() const;
    std::vector<CyclicFactor> factors() const;
    // Multiplicity a_r of exponent r (0 when absent).
    unsigned multiplicity_of(unsigned exponent) const noexcept;
    bool is_cyclic() const noexcept;

    // "p:[e,e,...]" with exponents descending.
    std::string to_string() const;

    bool operator==(const PrimaryGroupSpec&) const = default;

private:
    std::uint64_t prime_;
    std::vector<ExponentClass> classes_;
    unsigned rank_ = 0;
};

class AbelianGroupSpec {
public:
    AbelianGroupSpec() = default;
    // Parts are sorted by prime; duplicate primes are an InputError.
    explicit AbelianGroupSpec(std::vector<PrimaryGroupSpec> parts);

    // Grammar: spec := part (";" part)* ; part := prime ":[" exps "]".
    static AbelianGroupSpec parse(std::string_view text);

    const std::vector<PrimaryGroupSpec>& parts() const noexcept { return parts_; }
    std::uint64_t order() const;
    bool is_primary() const noexcept { return parts_.size() == 1; }
    std::string to_string() const;

    bool operator==(const AbelianGroupSpec&) const = default;

private:
    std::vector<PrimaryGroupSpec> parts_;
};

struct GroupElement {
    std::vector<std::uint64_t> exps;
    auto operator<=>(const GroupElement&) const = default;
};

// x_{(exponent, copy), power}, 1 <= power <= exponent.
struct LongGenerator {
    unsigned exponent = 0;
    unsigned copy = 0;
    unsigned power = 0;
    bool operator==(const LongGenerator&) const = default;
};

std::string to_string(const LongGenerator& g);

class AbelianGroup {
public:
    explicit AbelianGroup(AbelianGroupSpec spec);
    explicit AbelianGroup(const PrimaryGroupSpec& spec);

    const AbelianGroupSpec& spec() const noexcept { return spec_; }
    const std::vector<CyclicFactor>& factors() const noexcept { return factors_; }
    std::size_t factor_count() const noexcept { return factors_.size(); }
    std::uint64_t order() const noexcept { return order_; }
    // lcm of the factor orders.
    std::uint64_t exponent() const noexcept { return exponent_; }
    bool is_primary() const noexcept { return spec_.is_primary(); }
    // The prime of a primary group; InputError otherwise.
    std::uint64_t prime() const;

    GroupElement identity() const;
    // Throws InputError on wrong length or unreduced entries.
    void validate(const GroupElement& g) const;
    bool contains(const GroupElement& g) const noexcept;

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, std::uint64_t k) const;
    std::uint64_t element_order(const GroupElement& g) const;

    std::size_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::size_t index) const;
    std::vector<GroupElement> elements() const;

    // Index of a*b given indices, without materializing elements.
    std::size_t mul_index(std::size_t a, std::size_t b) const;

    // "(e0,e1,...)".
    std::string format(const GroupElement& g) const;

    bool operator==(const AbelianGroup& other) const noexcept { return spec_ == other.spec_; }

private:
    AbelianGroupSpec spec_;
    std::vector<CyclicFactor> factors_;
    std::vector<std::size_t> strides_;
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 1;
};

// Canonical composition-chain order: exponent classes in spec order
// (exponent descending), copies j descending, powers a = 1..s ascending.
// Every prefix of length l generates a subgroup of order p^l.
std::vector<LongGenerator> long_generator_sequence(const PrimaryGroupSpec& spec);

// x_{(s,j),a} -> p^{s-a} in factor (s,j).
GroupElement embed_generator(const PrimaryGroupSpec& spec, const LongGenerator& g);

// True when every factor's powers appear as 1, 2, ..., s in this order and each
// generator appears exactly once. Such an order still yields a composition chain.
bool is_power_monotone(const PrimaryGroupSpec& spec, const std::vector<LongGenerator>& order);

// Parses "s.j.a,s.j.a,..." and validates it as a power-monotone order.
std::vector<LongGenerator> parse_generator_order(const PrimaryGroupSpec& spec,
                                                 std::string_view text);

// Smallest subgroup containing gens, sorted by enumeration index.
std::vector<GroupElement> subgroup_closure(const AbelianGroup& group,
                                           const std::vector<GroupElement>& gens);

// Same closure as sorted enumeration indices.
std::vector<std::size_t> subgroup_closure_indices(const AbelianGroup& group,
                                                  const std::vector<GroupElement>& gens);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace abelpci
