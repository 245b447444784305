#include "abelpci/pcidiagram.hpp"

#include <algorithm>
#include <numeric>

#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"

namespace abelpci {

namespace {

unsigned log_p(std::uint64_t value, std::uint64_t p) {
    unsigned r = 0;
    std::uint64_t q = 1;
    while (q < value) {
        q *= p;
        ++r;
    }
    if (q != value) throw InvariantError("index is not a power of p");
    return r;
}

bool contains_index(const std::vector<std::size_t>& sorted, std::size_t i) {
    return std::binary_search(sorted.begin(), sorted.end(), i);
}

// (1/p) sum_{k<p} (c x)^k with x of index x_idx and c = zeta_m^{exponent}.
CycloAlgebraElement twisted_average(GroupPtr group, std::uint64_t m, std::uint64_t p,
                                    std::size_t x_idx, std::uint64_t exponent) {
    CycloAlgebraElement out(group, m);
    const Rational w = make_rational(1, p);
    std::size_t xk = 0;
    for (std::uint64_t k = 0; k < p; ++k) {
        const auto e = static_cast<std::int64_t>((exponent % m) * k % m);
        out[xk] += CycloNumber::zeta_power(m, e) * w;
        xk = group->mul_index(xk, x_idx);
    }
    return out;
}

}  // namespace

const char* to_string(VertexOrigin origin) noexcept {
    switch (origin) {
        case VertexOrigin::Root: return "root";
        case VertexOrigin::TrivialChild: return "trivial-child";
        case VertexOrigin::PrimedChild: return "primed-child";
        case VertexOrigin::Persisted: return "persisted";
        case VertexOrigin::Split: return "split";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Diagram

bool is_p_power_of(const AbelianGroup& group, const GroupElement& z, const GroupElement& u,
                   unsigned max_steps) {
    const auto p = group.prime();
    GroupElement w = u;
    for (unsigned s = 1; s <= max_steps; ++s) {
        w = group.power(w, p);
        if (w == z) return true;
    }
    return false;
}

bool persists_under(const AbelianGroup& group, const std::vector<std::size_t>& kernel,
                    const GroupElement& z, const GroupElement& u, unsigned steps) {
    const auto w = group.index_of(group.power(u, ipow(group.prime(), steps)));
    if (contains_index(kernel, w)) return false;
    // w in <K, z> \ K  <=>  w z^{-i} in K for some 1 <= i < p
    const auto z_inv = group.index_of(group.inverse(z));
    std::size_t shifted = w;
    for (std::uint64_t i = 1; i < group.prime(); ++i) {
        shifted = group.mul_index(shifted, z_inv);
        if (contains_index(kernel, shifted)) return true;
    }
    return false;
}

std::size_t split_correction(const AbelianGroup& group, const std::vector<std::size_t>& level,
                             const std::vector<std::size_t>& kernel, const GroupElement& u) {
    const auto u_idx = group.index_of(u);
    for (auto w : level) {
        const auto wu = group.element_at(group.mul_index(w, u_idx));
        if (contains_index(kernel, group.index_of(group.power(wu, group.prime())))) return w;
    }
    throw InvariantError("no w in G_l with (w u)^p in K");
}

std::vector<std::size_t> PciDiagram::level_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels_) out.push_back(level.size());
    return out;
}

AlgebraElement PciDiagram::expand(const PciVertex& v) const { return expand_factored(group_, v.form); }

std::vector<AlgebraElement> PciDiagram::leaf_idempotents() const {
    std::vector<AlgebraElement> out;
    for (const auto& v : leaves()) out.push_back(expand(v));
    return out;
}

std::string PciDiagram::label(const PciVertex& v) const {
    if (v.trivial) return "trivial";
    std::string out = "K=<";
    for (std::size_t i = 0; i < v.form.kernel_gens.size(); ++i) {
        if (i) out += ',';
        out += group_->format(v.form.kernel_gens[i]);
    }
    out += ">; z=" + group_->format(*v.form.primed);
    return out;
}

PciDiagram build_pci_diagram(const PrimaryGroupSpec& spec, const DiagramOptions& options) {
    if (spec.order() > options.max_order) {
        throw InputError("group order " + std::to_string(spec.order()) + " exceeds the cap " +
                         std::to_string(options.max_order));
    }
    PciDiagram d;
    d.spec_ = spec;
    d.group_ = make_group(spec);
    const auto& group = *d.group_;
    const auto p = spec.prime();
    const unsigned n_steps = spec.rank();

    if (options.order) {
        if (!is_power_monotone(spec, *options.order)) {
            throw InputError("generator order is not power-monotone for " + spec.to_string());
        }
        d.generators_ = *options.order;
    } else {
        d.generators_ = long_generator_sequence(spec);
    }
    for (const auto& g : d.generators_) d.generator_elements_.push_back(embed_generator(spec, g));

    d.level_subgroups_.push_back({0});
    for (unsigned l = 1; l <= n_steps; ++l) {
        std::vector<GroupElement> prefix(d.generator_elements_.begin(), d.generator_elements_.begin() + l);
        d.level_subgroups_.push_back(subgroup_closure_indices(group, prefix));
    }

    PciVertex root;
    root.kernel = {0};
    d.levels_.push_back({root});

    for (unsigned l = 0; l < n_steps; ++l) {
        const auto& u = d.generator_elements_[l];
        const auto& current = d.levels_[l];
        const auto next_order = d.level_subgroups_[l + 1].size();
        std::vector<PciVertex> next;
        for (std::size_t vi = 0; vi < current.size(); ++vi) {
            const auto& v = current[vi];
            auto emit = [&](PciVertex child) {
                child.level = l + 1;
                child.parent = vi;
                child.field_index = child.trivial ? 0 : log_p(next_order / child.kernel.size(), p);
                d.edges_.push_back({l, vi, next.size()});
                next.push_back(std::move(child));
            };
            if (v.trivial) {
                PciVertex t;
                t.form.kernel_gens = v.form.kernel_gens;
                t.form.kernel_gens.push_back(u);
                t.kernel = d.level_subgroups_[l + 1];
                t.origin = VertexOrigin::TrivialChild;
                emit(std::move(t));

                PciVertex primed;
                primed.form.kernel_gens = v.form.kernel_gens;
                primed.form.primed = u;
                primed.trivial = false;
                primed.kernel = v.kernel;
                primed.origin = VertexOrigin::PrimedChild;
                emit(std::move(primed));
                continue;
            }
            const auto& z = *v.form.primed;
            if (persists_under(group, v.kernel, z, u, v.field_index)) {
                PciVertex same = v;
                same.origin = VertexOrigin::Persisted;
                same.branch = 0;
                emit(std::move(same));
                continue;
            }
            const auto wu = group.mul(group.element_at(split_correction(group, d.level_subgroups_[l], v.kernel, u)), u);
            GroupElement zi = group.identity();
            for (unsigned i = 0; i < p; ++i) {
                PciVertex child;
                child.form.kernel_gens = v.form.kernel_gens;
                child.form.kernel_gens.push_back(group.mul(zi, wu));
                child.form.primed = z;
                child.trivial = false;
                child.kernel = subgroup_closure_indices(group, child.form.kernel_gens);
                child.origin = VertexOrigin::Split;
                child.branch = i;
                emit(std::move(child));
                zi = group.mul(zi, z);
            }
        }
        d.levels_.push_back(std::move(next));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Cyclic groups over Q

std::vector<AlgebraElement> cyclic_rational_pcis(std::uint64_t p, unsigned n) {
    const PrimaryGroupSpec spec = n == 0 ? PrimaryGroupSpec(p, {}) : PrimaryGroupSpec(p, {{n, 1}});
    auto group = make_group(spec);
    auto x_at = [&](unsigned i) {
        GroupElement x = group->identity();
        x.exps[0] = ipow(p, n - i);
        return x;
    };
    std::vector<AlgebraElement> prefix{AlgebraElement::identity(group)};
    for (unsigned i = 1; i <= n; ++i) prefix.push_back(convolve(prefix.back(), e_of(group, x_at(i))));

    std::vector<AlgebraElement> out{prefix[n]};
    for (unsigned i = 1; i <= n; ++i) out.push_back(convolve(prefix[i - 1], e_prime_of(group, x_at(i))));
    return out;
}

// ---------------------------------------------------------------------------
// Splitting field

std::vector<SplittingPci> splitting_field_pcis(std::uint64_t p, unsigned n, std::uint64_t max_order) {
    if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
    const std::uint64_t m = ipow(p, n);
    if (m > max_order) {
        throw InputError("p^n = " + std::to_string(m) + " exceeds the cap " + std::to_string(max_order));
    }
    const PrimaryGroupSpec spec = n == 0 ? PrimaryGroupSpec(p, {}) : PrimaryGroupSpec(p, {{n, 1}});
    auto group = make_group(spec);
    std::vector<SplittingPci> out;
    for (std::uint64_t t = 0; t < m; ++t) {
        auto e = CycloAlgebraElement::identity(group, m);
        for (unsigned j = 1; j <= n; ++j) {
            const auto x_j = static_cast<std::size_t>(ipow(p, n - j));
            e = cyclo_convolve(e, twisted_average(group, m, p, x_j, t * ipow(p, n - j)));
        }
        out.push_back({t, std::move(e)});
    }
    return out;
}

SplittingPci lift_splitting_pci(const SplittingPci& eta, GroupPtr target, std::uint64_t p, unsigned n) {
    if (n == 0) throw InputError("lift_splitting_pci: target level must be at least 1");
    const std::uint64_t m = ipow(p, n);
    if (eta.element.modulus() != m / p) throw InputError("lift_splitting_pci: incompatible modulus");
    if (target->order() != m || eta.element.size() * p != m) {
        throw InputError("lift_splitting_pci: group orders do not match p^(n-1) -> p^n");
    }
    std::vector<std::size_t> map(eta.element.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i * p;
    return {eta.index, lift(eta.element, std::move(target), map, m)};
}

std::vector<SplittingPci> extension_children(const SplittingPci& lifted_eta, std::uint64_t p, unsigned n) {
    const std::uint64_t m = ipow(p, n);
    if (n == 0 || lifted_eta.element.modulus() != m || lifted_eta.element.size() != m) {
        throw InputError("extension_children: eta must live in Q(zeta_{p^n})[C_{p^n}]");
    }
    const std::uint64_t step = m / p;
    if (lifted_eta.index >= step) throw InputError("extension_children: label out of range");
    std::vector<SplittingPci> out;
    for (std::uint64_t i = 0; i < p; ++i) {
        const std::uint64_t label = lifted_eta.index + i * step;
        auto factor = twisted_average(lifted_eta.element.group_ptr(), m, p, 1, label);
        out.push_back({label, cyclo_convolve(lifted_eta.element, factor)});
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> galois_orbits(std::uint64_t m) {
    std::vector<char> seen(m, 0);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t t = 0; t < m; ++t) {
        if (seen[t]) continue;
        std::vector<std::uint64_t> orbit;
        for (std::uint64_t k = 1; k <= m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            const auto kt = (k * t) % m;
            if (!seen[kt]) {
                seen[kt] = 1;
                orbit.push_back(kt);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<AlgebraElement> galois_orbit_collapse(const std::vector<SplittingPci>& set, std::uint64_t m) {
    std::vector<const SplittingPci*> by_label(m, nullptr);
    for (const auto& s : set) {
        if (s.index >= m || by_label[s.index]) throw InputError("galois_orbit_collapse: labels must be 0..m-1");
        by_label[s.index] = &s;
    }
    if (set.size() != m) throw InputError("galois_orbit_collapse: expected one PCI per label");
    std::vector<AlgebraElement> out;
    for (const auto& orbit : galois_orbits(m)) {
        CycloAlgebraElement sum = by_label[orbit.front()]->element;
        for (std::size_t i = 1; i < orbit.size(); ++i) sum += by_label[orbit[i]]->element;
        if (!sum.is_rational()) {
            throw InvariantError("Galois orbit sum with least label " + std::to_string(orbit.front()) +
                                 " has irrational coefficients");
        }
        out.push_back(sum.to_rational());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cross-prime composition

std::vector<std::size_t> part_embedding(const AbelianGroup& full, std::size_t part_index) {
    const auto& parts = full.spec().parts();
    if (part_index >= parts.size()) throw InputError("part index out of range");
    std::size_t offset = 0;
    for (std::size_t i = 0; i < part_index; ++i) offset += parts[i].factors().size();
    const AbelianGroup part(parts[part_index]);
    std::vector<std::size_t> map(part.order());
    for (std::size_t i = 0; i < part.order(); ++i) {
        auto g = part.element_at(i);
        auto h = full.identity();
        std::copy(g.exps.begin(), g.exps.end(), h.exps.begin() + static_cast<std::ptrdiff_t>(offset));
        map[i] = full.index_of(h);
    }
    return map;
}

std::vector<ComposedPci> cross_prime_product(GroupPtr full, const std::vector<PrimaryPciSet>& parts) {
    const auto& spec_parts = full->spec().parts();
    if (parts.size() != spec_parts.size()) throw InputError("cross_prime_product: one PCI set per prime required");
    std::vector<std::vector<AlgebraElement>> lifted(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!(parts[i].group->spec() == AbelianGroupSpec({spec_parts[i]}))) {
            throw InputError("cross_prime_product: PCI set " + std::to_string(i) + " belongs to " +
                             parts[i].group->spec().to_string() + ", expected " + spec_parts[i].to_string());
        }
        if (parts[i].field_indices.size() != parts[i].pcis.size()) {
            throw InputError("cross_prime_product: field index list length mismatch");
        }
        const auto map = part_embedding(*full, i);
        for (const auto& e : parts[i].pcis) lifted[i].push_back(lift(e, full, map));
    }

    std::vector<ComposedPci> out;
    std::vector<std::size_t> pick(parts.size(), 0);
    const bool any_empty = std::any_of(parts.begin(), parts.end(), [](const auto& s) { return s.pcis.empty(); });
    if (any_empty) return out;
    while (true) {
        ComposedPci c{AlgebraElement::identity(full), {}, 1, 1};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            c.element = convolve(c.element, lifted[i][pick[i]]);
            const auto r = parts[i].field_indices[pick[i]];
            const auto q = ipow(spec_parts[i].prime(), r);
            c.field_indices.push_back(r);
            c.component_order *= q;
            c.dimension *= euler_phi(q);
        }
        out.push_back(std::move(c));
        std::size_t i = parts.size();
        while (i > 0) {
            --i;
            if (++pick[i] < parts[i].pcis.size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (parts.empty()) return out;
    }
}

std::vector<ComposedPci> engine_pci_set(const AbelianGroupSpec& spec, std::uint64_t max_order) {
    if (spec.order() > max_order) {
        throw InputError("group order " + std::to_string(spec.order()) + " exceeds the cap " +
                         std::to_string(max_order));
    }
    auto full = make_group(spec);
    std::vector<PrimaryPciSet> sets;
    for (const auto& part : spec.parts()) {
        const auto diagram = build_pci_diagram(part, {std::nullopt, max_order});
        PrimaryPciSet s{diagram.group(), diagram.leaf_idempotents(), {}};
        for (const auto& v : diagram.leaves()) s.field_indices.push_back(v.field_index);
        sets.push_back(std::move(s));
    }
    return cross_prime_product(full, sets);
}

}  // namespace abelpci
