#include "abelpci/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "abelpci/cyclotome.hpp"
#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"
#include "abelpci/oracle.hpp"

namespace abelpci {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

// Index of the first pair whose product is nonzero, or pairs.size().
// Pairs are independent, so they are split across threads; the reported
// witness is the earliest failing pair regardless of scheduling.
std::size_t first_nonorthogonal(const std::vector<AlgebraElement>& set, const std::vector<Pair>& pairs) {
    std::atomic<std::size_t> first{pairs.size()};
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < pairs.size(); k = next++) {
            if (k >= first.load()) return;
            if (!are_orthogonal(set[pairs[k].first], set[pairs[k].second])) {
                std::size_t cur = first.load();
                while (k < cur && !first.compare_exchange_weak(cur, k)) {
                }
            }
        }
    };
    if (workers == 1 || pairs.size() < 64) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return first.load();
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

CheckResult pass(std::string name, std::string detail) { return {std::move(name), true, std::move(detail), {}}; }

CheckResult fail(std::string name, std::string detail, std::optional<std::string> witness = std::nullopt) {
    return {std::move(name), false, std::move(detail), std::move(witness)};
}

std::string format_coeffs(const AlgebraElement& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + to_string(e[i]);
    return s + "]";
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_complete_orthogonal_set(const std::string& name, const std::vector<AlgebraElement>& set,
                                          CheckLevel level) {
    if (set.empty()) return fail(name, "empty set");
    AlgebraElement sum(set.front().group_ptr());
    for (const auto& e : set) sum += e;
    if (!(sum == AlgebraElement::identity(set.front().group_ptr()))) {
        return fail(name, "members do not sum to 1", format_coeffs(sum));
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!is_idempotent(set[i])) return fail(name, "member is not idempotent", "member " + std::to_string(i));
    }
    std::vector<Pair> pairs;
    const std::size_t k = set.size();
    const std::size_t total = k * (k - 1) / 2;
    if (level == CheckLevel::Full || total <= 8 * k) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
        }
    } else {
        std::mt19937_64 rng(kSampleSeed);
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        while (pairs.size() < 8 * k) {
            auto i = pick(rng);
            auto j = pick(rng);
            if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    const auto bad = first_nonorthogonal(set, pairs);
    if (bad != pairs.size()) {
        return fail(name, "members are not orthogonal",
                    "pair " + std::to_string(pairs[bad].first) + "," + std::to_string(pairs[bad].second));
    }
    return pass(name, std::to_string(k) + " idempotents, " + std::to_string(pairs.size()) + " of " +
                          std::to_string(total) + " pairs orthogonal, sum = 1");
}

CheckResult check_vertex_kernels(const PciDiagram& diagram) {
    const std::string name = "p=" + std::to_string(diagram.spec().prime()) + ".vertex_kernels";
    const auto& group = *diagram.group();
    const auto p = diagram.spec().prime();
    std::size_t checked = 0;
    for (std::size_t l = 0; l < diagram.levels().size(); ++l) {
        const auto& gl = diagram.level_subgroups()[l];
        for (std::size_t vi = 0; vi < diagram.levels()[l].size(); ++vi) {
            const auto& v = diagram.levels()[l][vi];
            const std::string where = "level " + std::to_string(l) + " vertex " + std::to_string(vi);
            if (v.trivial) {
                if (v.form.primed || v.kernel != gl) return fail(name, "trivial vertex is not G_l^", where);
            } else {
                if (!v.form.primed) return fail(name, "nontrivial vertex without a primed factor", where);
                const auto& gens = diagram.generator_elements();
                if (std::find(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(l), *v.form.primed) ==
                    gens.begin() + static_cast<std::ptrdiff_t>(l)) {
                    return fail(name, "primed element is not a chain generator of G_l", where);
                }
            }
            const auto e = diagram.expand(v);
            if (subgroup_closure_indices(group, v.form.kernel_gens) != v.kernel) {
                return fail(name, "tracked K differs from the closure of its generators", where);
            }
            const auto stab = stabilizer(e);
            if (stab != v.kernel) {
                return fail(name, "tracked K differs from the algebraic kernel", where + ": {" + join_indices(stab) + "}");
            }
            if (gl.size() / v.kernel.size() != ipow(p, v.field_index)) {
                return fail(name, "field index inconsistent with |G_l/K|", where);
            }
            ++checked;
        }
    }
    return pass(name, std::to_string(checked) + " vertices: one primed factor per nontrivial vertex, K = kernel");
}

CheckResult check_level_soundness(const PciDiagram& diagram, CheckLevel level) {
    const std::string name = "p=" + std::to_string(diagram.spec().prime()) + ".level_soundness";
    for (std::size_t l = 0; l < diagram.levels().size(); ++l) {
        std::vector<AlgebraElement> set;
        for (const auto& v : diagram.levels()[l]) set.push_back(diagram.expand(v));
        auto r = check_complete_orthogonal_set(name, set, level);
        if (!r.passed) {
            r.detail = "level " + std::to_string(l) + ": " + r.detail;
            return r;
        }
    }
    std::string sizes;
    for (auto s : diagram.level_sizes()) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    return pass(name, "level sizes [" + sizes + "], every level complete and orthogonal");
}

CheckResult check_cyclic_closed_form(std::uint64_t p, unsigned n) {
    const std::string name = "cyclic.closed_form";
    const auto closed = cyclic_rational_pcis(p, n);
    if (closed.size() != n + 1) return fail(name, "expected " + std::to_string(n + 1) + " members");
    const PrimaryGroupSpec spec = n == 0 ? PrimaryGroupSpec(p, {}) : PrimaryGroupSpec(p, {{n, 1}});
    const auto diagram = build_pci_diagram(spec, {std::nullopt, ipow(p, n)});
    auto leaves = diagram.leaf_idempotents();
    // Both live over C_{p^n}; compare through one group object.
    std::vector<AlgebraElement> rebased;
    for (const auto& e : closed) rebased.emplace_back(leaves.front().group_ptr(), e.coeffs());
    const auto cmp = compare_pci_sets(rebased, leaves);
    if (!cmp.equal) return fail(name, "closed form differs from diagram leaves: " + cmp.detail);
    for (unsigned i = 0; i <= n; ++i) {
        const auto info = kernel_and_field(closed[i]);
        const unsigned expected = i == 0 ? 0 : n + 1 - i;
        if (info.field_index != expected) {
            return fail(name, "field index of e_" + std::to_string(i) + " is " + std::to_string(*info.field_index) +
                                  ", expected " + std::to_string(expected));
        }
    }
    return pass(name, std::to_string(n + 1) + " members equal to diagram leaves; field index of e_i = n+1-i");
}

CheckResult check_splitting_field(std::uint64_t p, unsigned n) {
    const std::string name = "splitting.field";
    const auto m = ipow(p, n);
    const auto set = splitting_field_pcis(p, n, m);
    if (set.size() != m) return fail(name, "expected p^n splitting PCIs");
    const auto group = set.front().element.group_ptr();

    auto sum = CycloAlgebraElement(group, m);
    for (const auto& s : set) {
        if (!is_idempotent(s.element)) return fail(name, "not idempotent", "t=" + std::to_string(s.index));
        if (!spans_rank_one(s.element)) return fail(name, "component is not one-dimensional", "t=" + std::to_string(s.index));
        sum += s.element;
    }
    if (!(sum == CycloAlgebraElement::identity(group, m))) return fail(name, "splitting PCIs do not sum to 1");
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (!are_orthogonal(set[i].element, set[j].element)) {
                return fail(name, "splitting PCIs not orthogonal", "t=" + std::to_string(i) + "," + std::to_string(j));
            }
        }
    }

    if (n >= 1) {
        const auto lower = splitting_field_pcis(p, n - 1, m);
        std::vector<const CycloAlgebraElement*> by_label(m, nullptr);
        std::size_t produced = 0;
        for (const auto& eta : lower) {
            const auto lifted = lift_splitting_pci(eta, group, p, n);
            auto children = extension_children(lifted, p, n);
            CycloAlgebraElement child_sum(group, m);
            for (const auto& c : children) {
                child_sum += c.element;
                if (!(c.element == set[c.index].element)) {
                    return fail(name, "extension child differs from the splitting PCI with the same label",
                                "t=" + std::to_string(c.index));
                }
                if (by_label[c.index]) return fail(name, "label produced twice", "t=" + std::to_string(c.index));
                by_label[c.index] = &set[c.index].element;
                ++produced;
            }
            if (!(child_sum == lifted.element)) {
                return fail(name, "children do not sum to their parent", "eta t=" + std::to_string(eta.index));
            }
        }
        if (produced != m) return fail(name, "extension children do not cover every label");
    }

    const auto collapsed = galois_orbit_collapse(set, m);
    if (collapsed.size() != n + 1) return fail(name, "orbit count " + std::to_string(collapsed.size()));
    auto rational = cyclic_rational_pcis(p, n);
    std::vector<AlgebraElement> rebased;
    for (const auto& e : rational) rebased.emplace_back(group, e.coeffs());
    const auto cmp = compare_pci_sets(collapsed, rebased);
    if (!cmp.equal) return fail(name, "orbit sums differ from the rational PCIs: " + cmp.detail);
    return pass(name, std::to_string(m) + " rank-one PCIs over Q(zeta_" + std::to_string(m) + "), " +
                          std::to_string(n + 1) + " Galois orbits");
}

std::vector<std::vector<LongGenerator>> alternate_orders(const PrimaryGroupSpec& spec) {
    const auto canonical = long_generator_sequence(spec);
    struct Factor {
        unsigned s;
        unsigned j;
    };
    std::vector<Factor> factors;  // canonical factor order
    for (const auto& c : spec.classes()) {
        for (unsigned j = c.multiplicity; j >= 1; --j) factors.push_back({c.exponent, j});
    }
    std::vector<std::vector<LongGenerator>> out;
    auto add = [&](std::vector<LongGenerator> order) {
        if (order != canonical && std::find(out.begin(), out.end(), order) == out.end()) out.push_back(std::move(order));
    };

    std::vector<LongGenerator> reversed;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        for (unsigned a = 1; a <= it->s; ++a) reversed.push_back({it->s, it->j, a});
    }
    add(std::move(reversed));

    std::vector<LongGenerator> round_robin;
    const unsigned top = spec.max_exponent();
    for (unsigned a = 1; a <= top; ++a) {
        for (const auto& f : factors) {
            if (a <= f.s) round_robin.push_back({f.s, f.j, a});
        }
    }
    add(std::move(round_robin));
    return out;
}

VerificationReport run_verification(const AbelianGroupSpec& spec, const VerifyOptions& options) {
    VerificationReport report;
    report.group = spec.to_string();
    if (spec.order() > options.max_order) {
        throw InputError("group order " + std::to_string(spec.order()) + " exceeds the cap " +
                         std::to_string(options.max_order));
    }
    if (options.order && !spec.is_primary()) throw InputError("a generator order applies to p-groups only");
    report.level = spec.order() > kFullCheckLimit ? CheckLevel::Sampled : options.level;
    const auto level = report.level;
    auto group = make_group(spec);

    std::vector<PciDiagram> diagrams;
    std::vector<PrimaryPciSet> sets;
    for (const auto& part : spec.parts()) {
        diagrams.push_back(build_pci_diagram(part, {options.order, options.max_order}));
        const auto& d = diagrams.back();
        PrimaryPciSet s{d.group(), d.leaf_idempotents(), {}};
        for (const auto& v : d.leaves()) s.field_indices.push_back(v.field_index);
        sets.push_back(std::move(s));
    }
    const auto composed = cross_prime_product(group, sets);
    std::vector<AlgebraElement> engine;
    for (const auto& c : composed) engine.push_back(c.element);

    report.checks.push_back(check_complete_orthogonal_set("engine.soundness", engine, level));

    {
        const std::string name = "engine.dimensions";
        std::uint64_t total = 0;
        std::optional<CheckResult> bad;
        for (std::size_t i = 0; i < composed.size() && !bad; ++i) {
            try {
                const auto info = kernel_and_field(composed[i].element);
                if (info.quotient_order != composed[i].component_order || info.dimension != composed[i].dimension) {
                    bad = fail(name, "recorded component differs from kernel computation", "member " + std::to_string(i));
                }
                total += info.dimension;
            } catch (const std::exception& ex) {
                bad = fail(name, ex.what(), "member " + std::to_string(i));
            }
        }
        if (!bad && total != spec.order()) bad = fail(name, "dimensions sum to " + std::to_string(total));
        report.checks.push_back(bad ? *bad : pass(name, "sum of dim Q[G]e = " + std::to_string(total) + " = |G|"));
    }

    const auto oracle = oracle_pci_set(group, options.max_order);
    std::vector<AlgebraElement> oracle_set;
    for (const auto& o : oracle) oracle_set.push_back(o.element);
    report.checks.push_back(check_complete_orthogonal_set("oracle.soundness", oracle_set, level));
    {
        const auto cmp = compare_pci_sets(engine, oracle_set);
        CheckResult r{"oracle.equivalence", cmp.equal, "engine vs character oracle: " + cmp.detail, {}};
        if (cmp.witness) r.witness = format_coeffs(*cmp.witness);
        report.checks.push_back(std::move(r));
    }

    for (std::size_t pi = 0; pi < diagrams.size(); ++pi) {
        const auto& d = diagrams[pi];
        const auto& part = d.spec();
        const std::string prefix = "p=" + std::to_string(part.prime()) + ".";
        report.checks.push_back(check_vertex_kernels(d));
        report.checks.push_back(check_level_soundness(d, level));

        try {
            const auto profile = wedderburn_profile(part);
            std::string diag;
            bool factor_ok = true;
            for (const auto& row : profile.rows) {
                if (!row.statement_agree) {
                    diag += (diag.empty() ? "" : "; ") + std::string("r=") + std::to_string(row.r) +
                            " statement-variant " + row.statement_coefficient.get_str() + " vs census " +
                            row.census_coefficient.get_str();
                }
                factor_ok = factor_ok && row.factorization_ok;
            }
            report.checks.push_back(profile.census_sums_to_order
                                        ? pass(prefix + "wedderburn.formula",
                                               "formula equals census for every r" +
                                                   (diag.empty() ? std::string() : " (diagnostic: " + diag + ")"))
                                        : fail(prefix + "wedderburn.formula", "census does not sum to |G|"));
            report.checks.push_back(factor_ok ? pass(prefix + "wedderburn.factorization",
                                                     "power-of-p part times part coprime to p")
                                              : fail(prefix + "wedderburn.factorization", "factorization check failed"));

            std::map<unsigned, std::uint64_t> engine_counts;
            for (const auto& v : d.leaves()) ++engine_counts[v.field_index];
            std::optional<CheckResult> bad;
            for (const auto& row : profile.rows) {
                const Integer got = engine_counts[row.r];
                if (got != row.census_coefficient) {
                    bad = fail(prefix + "wedderburn.engine_census",
                               "r=" + std::to_string(row.r) + ": engine " + got.get_str() + " vs census " +
                                   row.census_coefficient.get_str());
                    break;
                }
            }
            report.checks.push_back(bad ? *bad
                                        : pass(prefix + "wedderburn.engine_census",
                                               "PCIs per field index equal cyclic-subgroup counts"));
        } catch (const VerificationFailure& ex) {
            report.checks.push_back(fail(prefix + "wedderburn.formula", ex.what()));
        }

        if (part.is_cyclic()) {
            const unsigned n = part.max_exponent();
            auto r = check_cyclic_closed_form(part.prime(), n);
            r.name = prefix + r.name;
            report.checks.push_back(std::move(r));
            if (part.order() <= kSplitCheckLimit) {
                auto s = check_splitting_field(part.prime(), n);
                s.name = prefix + s.name;
                report.checks.push_back(std::move(s));
            }
        }

        if (options.alternate_orders) {
            const auto alts = alternate_orders(part);
            for (std::size_t k = 0; k < alts.size(); ++k) {
                const std::string name = prefix + "alternate_order[" + std::to_string(k) + "]";
                const auto alt = build_pci_diagram(part, {alts[k], options.max_order});
                const auto vk = check_vertex_kernels(alt);
                const auto lv = check_level_soundness(alt, level);
                auto leaves = alt.leaf_idempotents();
                auto part_oracle_full = oracle_pci_set(alt.group(), options.max_order);
                std::vector<AlgebraElement> part_oracle;
                for (const auto& o : part_oracle_full) part_oracle.push_back(o.element);
                const auto cmp = compare_pci_sets(leaves, part_oracle);
                std::string order_text;
                for (const auto& g : alts[k]) order_text += (order_text.empty() ? "" : " ") + to_string(g);
                const bool ok = vk.passed && lv.passed && cmp.equal;
                report.checks.push_back({name, ok,
                                         (ok ? "sound: " : "unsound: ") + order_text +
                                             (vk.passed ? "" : " | " + vk.detail) + (lv.passed ? "" : " | " + lv.detail) +
                                             (cmp.equal ? "" : " | " + cmp.detail),
                                         {}});
            }
        }
    }
    return report;
}

}  // namespace abelpci
