// Acceptance run: one line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "abelpci/cyclotome.hpp"
#include "abelpci/numtheory.hpp"
#include "abelpci/oracle.hpp"
#include "abelpci/pcidiagram.hpp"
#include "abelpci/shell.hpp"
#include "abelpci/verify.hpp"
#include "corpus.hpp"

using namespace abelpci;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::vector<std::string> corpus_all() {
    auto all = corpus::corpus_c();
    for (const auto& s : corpus::corpus_m()) all.push_back(s);
    return all;
}

std::vector<PrimaryPciSet> engine_parts(const AbelianGroupSpec& spec, std::vector<PciDiagram>* keep = nullptr) {
    std::vector<PrimaryPciSet> parts;
    for (const auto& part : spec.parts()) {
        auto d = build_pci_diagram(part);
        PrimaryPciSet s{d.group(), d.leaf_idempotents(), {}};
        for (const auto& v : d.leaves()) s.field_indices.push_back(v.field_index);
        parts.push_back(std::move(s));
        if (keep) keep->push_back(std::move(d));
    }
    return parts;
}

std::vector<AlgebraElement> engine_set(const AbelianGroupSpec& spec) {
    std::vector<AlgebraElement> out;
    for (const auto& c : cross_prime_product(make_group(spec), engine_parts(spec))) out.push_back(c.element);
    return out;
}

Outcome soundness() {
    std::size_t pcis = 0;
    for (const auto& text : corpus_all()) {
        const auto set = engine_set(AbelianGroupSpec::parse(text));
        const auto r = check_complete_orthogonal_set(text, set, CheckLevel::Full);
        if (!r.passed) return {false, text + ": " + r.detail + (r.witness ? " " + *r.witness : "")};
        pcis += set.size();
    }
    return {true, std::to_string(corpus_all().size()) + " specs, " + std::to_string(pcis) +
                      " PCIs, all pairs checked: e^2 = e, e_i e_j = 0, sum = 1"};
}

Outcome oracle_equivalence() {
    for (const auto& text : corpus_all()) {
        const auto spec = AbelianGroupSpec::parse(text);
        std::vector<AlgebraElement> oracle;
        for (const auto& o : oracle_pci_set(make_group(spec))) oracle.push_back(o.element);
        const auto cmp = compare_pci_sets(engine_set(spec), oracle);
        if (!cmp.equal) return {false, text + ": " + cmp.detail};
    }
    return {true, "engine leaves = character oracle as multisets on every spec"};
}

Outcome cyclic_closed_form() {
    const std::vector<std::pair<std::uint64_t, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1},
                                                                {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}};
    for (auto [p, n] : cases) {
        const auto r = check_cyclic_closed_form(p, n);
        if (!r.passed) return {false, "C_" + std::to_string(ipow(p, n)) + ": " + r.detail};
    }
    return {true, "p^n in {2,4,8,16,32,3,9,27,5,25,49}: n+1 members, equal to leaves, field index n+1-i"};
}

Outcome splitting() {
    const std::vector<std::pair<std::uint64_t, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 2}};
    for (auto [p, n] : cases) {
        const auto r = check_splitting_field(p, n);
        if (!r.passed) return {false, "C_" + std::to_string(ipow(p, n)) + ": " + r.detail};
    }
    return {true, "p^n in {2,4,8,3,9,25}: rank-one orthogonal set, extension children, n+1 orbits collapse"};
}

Outcome wedderburn() {
    for (const auto& text : corpus::corpus_c()) {
        const auto spec = AbelianGroupSpec::parse(text).parts().front();
        const auto prof = wedderburn_profile(spec);
        Integer total = 0;
        for (const auto& r : prof.rows) {
            if (r.formula_coefficient != r.census_coefficient) {
                return {false, text + " r=" + std::to_string(r.r) + ": formula " + r.formula_coefficient.get_str() +
                                   " vs census " + r.census_coefficient.get_str()};
            }
            total += r.census_coefficient * Integer(static_cast<unsigned long>(euler_phi(ipow(spec.prime(), r.r))));
        }
        if (total != Integer(static_cast<unsigned long>(spec.order()))) return {false, text + ": census does not sum to |G|"};
    }
    const auto c4 = wedderburn_profile(PrimaryGroupSpec(2, {{2, 1}}));
    const auto& row = c4.rows.at(2);
    if (row.census_coefficient != 1 || row.statement_coefficient != 2) {
        return {false, "C_4 r=2: census " + row.census_coefficient.get_str() + ", statement variant " +
                           row.statement_coefficient.get_str()};
    }
    return {true, "corrected exponent matches census on all of C; sum census*phi = |G|; C_4 r=2 census 1 vs variant 2"};
}

Outcome level_sizes() {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const auto sizes = build_pci_diagram(PrimaryGroupSpec(p, {{1, 2}})).level_sizes();
        if (sizes != std::vector<std::size_t>{1, 2, p + 2}) return {false, "p=" + std::to_string(p)};
    }
    return {true, "C_2^2: [1,2,4], C_3^2: [1,2,5], C_5^2: [1,2,7]"};
}

Outcome vertex_kernels() {
    std::size_t diagrams = 0;
    for (const auto& text : corpus_all()) {
        const auto spec = AbelianGroupSpec::parse(text);
        for (const auto& part : spec.parts()) {
            const auto r = check_vertex_kernels(build_pci_diagram(part));
            if (!r.passed) return {false, text + ": " + r.detail + (r.witness ? " " + *r.witness : "")};
            ++diagrams;
        }
    }
    return {true, std::to_string(diagrams) + " diagrams: one primed factor per nontrivial vertex, tracked K = kernel"};
}

Outcome ramanujan() {
    std::size_t n = 0;
    for (std::uint64_t m = 1; m <= 60; ++m) {
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(m); ++t, ++n) {
            if (ramanujan_sum(m, t) != ramanujan_sum_by_summation(m, t)) {
                return {false, "m=" + std::to_string(m) + " t=" + std::to_string(t)};
            }
        }
    }
    return {true, std::to_string(n) + " pairs (m <= 60, 0 <= t < m): closed form = cyclotomic summation"};
}

Outcome golden() {
    const std::pair<const char*, const char*> groups[] = {
        {"c4", "2:[2]"}, {"c3xc3", "3:[1,1]"}, {"c9xc3", "3:[2,1]"}, {"c12", "2:[2];3:[1]"}};
    std::size_t files = 0;
    for (const auto& [stem, spec] : groups) {
        for (const char* sub : {"pci", "diagram", "wedderburn"}) {
            const std::string path = std::string(ABELPCI_GOLDEN_DIR) + "/" + stem + "." + sub + ".json";
            std::ifstream in(path, std::ios::binary);
            if (!in) return {false, "missing " + path};
            std::ostringstream ss;
            ss << in.rdbuf();
            RunConfig cfg;
            cfg.subcommand = sub;
            cfg.group_spec = spec;
            const auto r = run(cfg);
            if (r.exit_code != kExitOk || r.output != ss.str()) return {false, std::string(stem) + " " + sub + " differs"};
            ++files;
        }
    }
    return {true, std::to_string(files) + " outputs byte-identical to golden files"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 soundness", soundness},
        {"2 oracle equivalence", oracle_equivalence},
        {"3 cyclic closed form", cyclic_closed_form},
        {"4 splitting field", splitting},
        {"5 wedderburn coefficients", wedderburn},
        {"6 C_p x C_p level sizes", level_sizes},
        {"7 primed factor and kernels", vertex_kernels},
        {"8 ramanujan sums", ramanujan},
        {"9 cli golden files", golden},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %-28s tol=0  %6.2fs  %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
        if (!o.passed) ++failed;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d/%zu criteria  %.2fs\n", failed ? "FAIL" : "PASS", static_cast<int>(criteria.size()) - failed,
                criteria.size(), total);
    return failed ? 1 : 0;
}
