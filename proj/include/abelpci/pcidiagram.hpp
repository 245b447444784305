#pragma once

// PCI-diagrams of rational group algebras of abelian p-groups.
//
// Along a composition chain 1 = G_0 < G_1 < ... < G_N = G (each step adds one
// long generator u), level l holds the primitive central idempotents of
// Q[G_l]. Every vertex is kept in factored form K^ (1 - e_z):
//   - a trivial vertex (K = G_l, no z) has two children: the trivial vertex of
//     the next level and K^ (1 - e_u);
//   - a vertex with primed z and |G_l / K| = p^r persists unchanged when
//     u^{p^r} lies in <K, z> but not in K (u extends the cyclic quotient);
//   - otherwise it splits into p children K_i^ (1 - e_z), K_i = <K, z^i w u>,
//     w in G_l the first element (by index) with (w u)^p in K; w = 1
//     whenever u^p already lies in K.
// The leaves at level N are the complete set of PCIs of Q[G].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "abelpci/cyclotome.hpp"
#include "abelpci/exactalg.hpp"
#include "abelpci/groupcore.hpp"

namespace abelpci {

inline constexpr std::uint64_t kDefaultMaxOrder = 4096;

enum class VertexOrigin { Root, TrivialChild, PrimedChild, Persisted, Split };

const char* to_string(VertexOrigin origin) noexcept;

struct PciVertex {
    unsigned level = 0;
    FactoredIdempotent form;
    bool trivial = true;
    // r with |G_l| / |K| = p^r; 0 for trivial vertices.
    unsigned field_index = 0;
    // Sorted indices (in the full group) of the tracked subgroup K.
    std::vector<std::size_t> kernel;
    std::optional<std::size_t> parent;
    VertexOrigin origin = VertexOrigin::Root;
    // Branch i of a split, i.e. K_i = <K, z^i u>.
    unsigned branch = 0;
};

struct DiagramEdge {
    unsigned level;  // parent level; the child sits at level + 1
    std::size_t parent;
    std::size_t child;
};

struct DiagramOptions {
    // Power-monotone override of the canonical generator order.
    std::optional<std::vector<LongGenerator>> order;
    std::uint64_t max_order = kDefaultMaxOrder;
};

class PciDiagram {
public:
    const PrimaryGroupSpec& spec() const noexcept { return spec_; }
    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<LongGenerator>& generators() const noexcept { return generators_; }
    const std::vector<GroupElement>& generator_elements() const noexcept { return generator_elements_; }
    // Sorted element indices of G_l for l = 0..N.
    const std::vector<std::vector<std::size_t>>& level_subgroups() const noexcept { return level_subgroups_; }
    const std::vector<std::vector<PciVertex>>& levels() const noexcept { return levels_; }
    const std::vector<DiagramEdge>& edges() const noexcept { return edges_; }

    const std::vector<PciVertex>& leaves() const { return levels_.back(); }
    std::vector<std::size_t> level_sizes() const;

    // The vertex as an element of Q[G] (it lies in Q[G_l]).
    AlgebraElement expand(const PciVertex& v) const;
    std::vector<AlgebraElement> leaf_idempotents() const;

    // "trivial" or "K=<g1,g2,...>; z=(..)".
    std::string label(const PciVertex& v) const;

private:
    friend PciDiagram build_pci_diagram(const PrimaryGroupSpec&, const DiagramOptions&);

    PrimaryGroupSpec spec_{2, {}};
    GroupPtr group_;
    std::vector<LongGenerator> generators_;
    std::vector<GroupElement> generator_elements_;
    std::vector<std::vector<std::size_t>> level_subgroups_;
    std::vector<std::vector<PciVertex>> levels_;
    std::vector<DiagramEdge> edges_;
};

// InputError when |G| exceeds options.max_order or the override order is not
// power-monotone.
PciDiagram build_pci_diagram(const PrimaryGroupSpec& spec, const DiagramOptions& options = {});

// Persistence test used by the builder: u^{p^steps} lies in <K, z> \ K, with
// steps = r for |G_l / K| = p^r. kernel holds sorted indices of K.
bool persists_under(const AbelianGroup& group, const std::vector<std::size_t>& kernel,
                    const GroupElement& z, const GroupElement& u, unsigned steps);

// The literal condition z = u^{p^s} for some 1 <= s <= max_steps.
bool is_p_power_of(const AbelianGroup& group, const GroupElement& z, const GroupElement& u,
                   unsigned max_steps);

// e_0 = e_{x_1} ... e_{x_n} and e_i = e_{x_1} ... e_{x_{i-1}} e'_{x_i} in
// Q[C_{p^n}], x_i = x^{p^{n-i}}, built as explicit products. Returned in the
// order e_0, e_1, ..., e_n.
std::vector<AlgebraElement> cyclic_rational_pcis(std::uint64_t p, unsigned n);

// PCI of Q(zeta_{p^n})[C_{p^n}] labelled by t in [0, p^n).
struct SplittingPci {
    std::uint64_t index = 0;
    CycloAlgebraElement element;
};

// prod_j e_{zeta_j x_j}, zeta_j = zeta_{p^n}^{t p^{n-j}}, for t = 0..p^n-1.
std::vector<SplittingPci> splitting_field_pcis(std::uint64_t p, unsigned n,
                                               std::uint64_t max_order = kDefaultMaxOrder);

// Moves a PCI of Q(zeta_{p^{n-1}})[C_{p^{n-1}}] into Q(zeta_{p^n})[C_{p^n}]
// along x -> x^p and zeta_{p^{n-1}} -> zeta_{p^n}^p; the label is kept.
SplittingPci lift_splitting_pci(const SplittingPci& eta, GroupPtr target, std::uint64_t p, unsigned n);

// The p products eta e_{eps^i zeta_n x_n}, eps = zeta_{p^n}^{p^{n-1}},
// zeta_n = zeta_{p^n}^{t'} a fixed p-th root of zeta_{n-1}; child i carries
// label t' + i p^{n-1}. eta must already live over Q(zeta_{p^n}).
std::vector<SplittingPci> extension_children(const SplittingPci& lifted_eta, std::uint64_t p, unsigned n);

// Orbits of t -> k t (mod m), gcd(k, m) = 1, each sorted, ordered by least member.
std::vector<std::vector<std::uint64_t>> galois_orbits(std::uint64_t m);

// Sums each Galois orbit of the labelled set; InvariantError if a sum has an
// irrational coefficient.
std::vector<AlgebraElement> galois_orbit_collapse(const std::vector<SplittingPci>& set, std::uint64_t m);

// PCI set of one primary part with the field index of each member.
struct PrimaryPciSet {
    GroupPtr group;
    std::vector<AlgebraElement> pcis;
    std::vector<unsigned> field_indices;
};

struct ComposedPci {
    AlgebraElement element;
    std::vector<unsigned> field_indices;  // r_p per prime, ascending primes
    std::uint64_t component_order = 1;    // prod p^{r_p}
    std::uint64_t dimension = 1;          // prod phi(p^{r_p})
};

// Index map embedding a primary part into the full group.
std::vector<std::size_t> part_embedding(const AbelianGroup& full, std::size_t part_index);

// All products of one PCI per primary part, lifted into Q[G]; ordered with the
// first prime varying slowest.
std::vector<ComposedPci> cross_prime_product(GroupPtr full, const std::vector<PrimaryPciSet>& parts);

// Diagram leaves of every primary part composed over the full group.
std::vector<ComposedPci> engine_pci_set(const AbelianGroupSpec& spec,
                                        std::uint64_t max_order = kDefaultMaxOrder);

}  // namespace abelpci
