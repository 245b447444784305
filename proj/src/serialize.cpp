#include "abelpci/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"

namespace abelpci {

namespace {

std::string field_name(std::uint64_t d) { return d == 1 ? "Q" : "Q(zeta_" + std::to_string(d) + ")"; }

Json element_names(const AbelianGroup& g) {
    Json out = Json::array();
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back(g.format(g.element_at(i)));
    return out;
}

std::string coeff_line(const AlgebraElement& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + to_string(a[i]);
    return s + "]";
}

std::string cyclo_text(const CycloNumber& c) {
    std::string s;
    const auto& co = c.coeffs();
    for (std::size_t k = 0; k < co.size(); ++k) {
        if (co[k] == 0) continue;
        std::string term = to_string(co[k]);
        if (k > 0) term += "*z^" + std::to_string(k);
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

std::string generator_list(const PciDiagram& d) {
    std::string s;
    for (const auto& g : d.generators()) s += (s.empty() ? "" : " ") + to_string(g);
    return s;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string leaf_field(std::uint64_t p, unsigned r) { return r == 0 ? "Q" : "Q(zeta_" + std::to_string(ipow(p, r)) + ")"; }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const AlgebraElement& a) {
    Json out = Json::array();
    for (const auto& q : a.coeffs()) out.push_back(to_string(q));
    return out;
}

Json to_json(const CycloNumber& c) {
    Json out;
    out["m"] = c.modulus();
    Json co = Json::array();
    for (const auto& q : c.coeffs()) co.push_back(to_string(q));
    out["coeffs"] = std::move(co);
    return out;
}

Json to_json(const CycloAlgebraElement& a) {
    Json out = Json::array();
    for (const auto& c : a.coeffs()) out.push_back(to_json(c));
    return out;
}

AlgebraElement algebra_element_from_json(GroupPtr group, const Json& j) {
    if (!j.is_array() || j.size() != group->order()) throw InputError("coefficient array has the wrong length");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string()) throw InputError("coefficients must be \"num/den\" strings");
        coeffs.push_back(parse_rational(v.get<std::string>()));
    }
    return AlgebraElement(std::move(group), std::move(coeffs));
}

CycloNumber cyclo_number_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs")) throw InputError("expected {\"m\", \"coeffs\"}");
    const auto m = j.at("m").get<std::uint64_t>();
    if (m == 0) throw InputError("modulus must be positive");
    std::vector<Rational> poly;
    for (const auto& v : j.at("coeffs")) poly.push_back(parse_rational(v.get<std::string>()));
    return CycloNumber(m, std::move(poly));
}

Json pci_list_json(const AbelianGroupSpec& spec, const std::vector<ComposedPci>& pcis) {
    auto group = make_group(spec);
    Json out;
    out["group"] = spec.to_string();
    out["order"] = spec.order();
    out["elements"] = element_names(*group);
    Json list = Json::array();
    for (const auto& c : pcis) {
        Json item;
        Json fi;
        for (std::size_t i = 0; i < spec.parts().size(); ++i) {
            fi[std::to_string(spec.parts()[i].prime())] = c.field_indices[i];
        }
        item["field_indices"] = std::move(fi);
        item["field"] = field_name(c.component_order);
        item["dimension"] = c.dimension;
        item["coeffs"] = to_json(c.element);
        list.push_back(std::move(item));
    }
    out["pcis"] = std::move(list);
    return out;
}

std::string pci_list_text(const AbelianGroupSpec& spec, const std::vector<ComposedPci>& pcis) {
    auto group = make_group(spec);
    std::ostringstream os;
    os << "group " << spec.to_string() << "  order " << spec.order() << "  pcis " << pcis.size() << "\n";
    os << "elements";
    for (std::size_t i = 0; i < group->order(); ++i) os << ' ' << group->format(group->element_at(i));
    os << "\n";
    for (std::size_t k = 0; k < pcis.size(); ++k) {
        os << "e" << k << "  " << field_name(pcis[k].component_order) << "  dim " << pcis[k].dimension << "\n  "
           << coeff_line(pcis[k].element) << "\n";
    }
    return os.str();
}

std::pair<GroupPtr, std::vector<AlgebraElement>> parse_pci_list_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed JSON: ") + ex.what());
    }
    if (!j.contains("group") || !j.contains("pcis")) throw InputError("not a PCI list");
    auto group = make_group(AbelianGroupSpec::parse(j.at("group").get<std::string>()));
    std::vector<AlgebraElement> out;
    for (const auto& item : j.at("pcis")) out.push_back(algebra_element_from_json(group, item.at("coeffs")));
    return {group, std::move(out)};
}

Json diagram_json(const AbelianGroupSpec& spec, const std::vector<PciDiagram>& diagrams) {
    Json out;
    out["group"] = spec.to_string();
    out["order"] = spec.order();
    Json parts = Json::array();
    for (const auto& d : diagrams) {
        Json part;
        part["prime"] = d.spec().prime();
        part["spec"] = d.spec().to_string();
        part["elements"] = element_names(*d.group());
        Json gens = Json::array();
        for (std::size_t i = 0; i < d.generators().size(); ++i) {
            Json g;
            g["name"] = to_string(d.generators()[i]);
            g["element"] = d.group()->format(d.generator_elements()[i]);
            gens.push_back(std::move(g));
        }
        part["generators"] = std::move(gens);
        Json sizes = Json::array();
        for (auto s : d.level_sizes()) sizes.push_back(s);
        part["level_sizes"] = std::move(sizes);
        Json levels = Json::array();
        for (const auto& level : d.levels()) {
            Json lv = Json::array();
            for (const auto& v : level) {
                Json vj;
                vj["label"] = d.label(v);
                vj["origin"] = to_string(v.origin);
                if (v.parent) vj["parent"] = *v.parent; else vj["parent"] = nullptr;
                vj["branch"] = v.branch;
                vj["kernel_order"] = v.kernel.size();
                vj["field_index"] = v.field_index;
                vj["coeffs"] = to_json(d.expand(v));
                lv.push_back(std::move(vj));
            }
            levels.push_back(std::move(lv));
        }
        part["levels"] = std::move(levels);
        Json edges = Json::array();
        for (const auto& e : d.edges()) edges.push_back(Json::array({e.level, e.parent, e.child}));
        part["edges"] = std::move(edges);
        parts.push_back(std::move(part));
    }
    out["parts"] = std::move(parts);
    return out;
}

std::string diagram_text(const AbelianGroupSpec& spec, const std::vector<PciDiagram>& diagrams) {
    std::ostringstream os;
    os << "group " << spec.to_string() << "\n";
    for (const auto& d : diagrams) {
        os << "part " << d.spec().to_string() << "  generators " << generator_list(d) << "\n";
        const auto& levels = d.levels();
        for (std::size_t l = 0; l < levels.size(); ++l) {
            os << "level " << l << " (" << levels[l].size() << ")\n";
            for (std::size_t i = 0; i < levels[l].size(); ++i) {
                const auto& v = levels[l][i];
                os << "  [" << i << "] " << d.label(v);
                if (v.parent) os << "  <- " << *v.parent;
                os << "  " << to_string(v.origin);
                if (l + 1 == levels.size()) os << "  " << leaf_field(d.spec().prime(), v.field_index);
                os << "\n";
            }
        }
    }
    return os.str();
}

std::string diagram_dot(const AbelianGroupSpec& spec, const std::vector<PciDiagram>& diagrams) {
    std::ostringstream os;
    os << "digraph pci {\n";
    os << "  label=\"" << dot_escape(spec.to_string()) << "\";\n";
    os << "  node [shape=box];\n";
    for (const auto& d : diagrams) {
        const std::string pre = "p" + std::to_string(d.spec().prime());
        const auto& levels = d.levels();
        for (std::size_t l = 0; l < levels.size(); ++l) {
            os << "  subgraph " << pre << "_rank" << l << " {\n    rank=same;\n";
            for (std::size_t i = 0; i < levels[l].size(); ++i) {
                const auto& v = levels[l][i];
                std::string label = dot_escape(d.label(v));
                if (l + 1 == levels.size()) label += "\\n" + leaf_field(d.spec().prime(), v.field_index);
                os << "    " << pre << "_" << l << "_" << i << " [label=\"" << label << "\"];\n";
            }
            os << "  }\n";
        }
        for (const auto& e : d.edges()) {
            os << "  " << pre << "_" << e.level << "_" << e.parent << " -> " << pre << "_" << e.level + 1 << "_" << e.child
               << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

namespace {

struct Component {
    std::uint64_t d = 1;
    Integer multiplicity = 1;
};

std::vector<Component> full_components(const std::vector<WedderburnProfile>& profiles) {
    std::vector<Component> acc{{1, 1}};
    for (const auto& prof : profiles) {
        std::vector<Component> next;
        for (const auto& c : acc) {
            for (const auto& row : prof.rows) {
                if (row.census_coefficient == 0) continue;
                next.push_back({c.d * ipow(prof.spec.prime(), row.r), c.multiplicity * row.census_coefficient});
            }
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), [](const Component& a, const Component& b) { return a.d < b.d; });
    return acc;
}

}  // namespace

Json wedderburn_json(const AbelianGroupSpec& spec, const std::vector<WedderburnProfile>& profiles) {
    Json out;
    out["group"] = spec.to_string();
    out["order"] = spec.order();
    Json parts = Json::array();
    for (const auto& prof : profiles) {
        Json part;
        part["prime"] = prof.spec.prime();
        part["spec"] = prof.spec.to_string();
        Json rows = Json::array();
        for (const auto& r : prof.rows) {
            Json row;
            row["r"] = r.r;
            row["a"] = r.a;
            row["b"] = r.b;
            row["c"] = r.c;
            row["elements_of_order"] = r.elements_of_order.get_str();
            row["census"] = r.census_coefficient.get_str();
            row["formula"] = r.formula_coefficient.get_str();
            row["statement_variant"] = r.statement_coefficient.get_str();
            row["power_part"] = r.power_part.get_str();
            row["coprime_part"] = r.coprime_part.get_str();
            row["agree"] = r.agree;
            row["statement_agree"] = r.statement_agree;
            rows.push_back(std::move(row));
        }
        part["rows"] = std::move(rows);
        part["census_sums_to_order"] = prof.census_sums_to_order;
        parts.push_back(std::move(part));
    }
    out["parts"] = std::move(parts);
    Json comps = Json::array();
    for (const auto& c : full_components(profiles)) {
        Json cj;
        cj["field"] = field_name(c.d);
        cj["conductor"] = c.d;
        cj["multiplicity"] = c.multiplicity.get_str();
        comps.push_back(std::move(cj));
    }
    out["components"] = std::move(comps);
    return out;
}

std::string wedderburn_text(const AbelianGroupSpec& spec, const std::vector<WedderburnProfile>& profiles) {
    std::ostringstream os;
    os << "group " << spec.to_string() << "  order " << spec.order() << "\n";
    for (const auto& prof : profiles) {
        os << "part " << prof.spec.to_string() << "\n";
        os << "  r  a  b  c  |E_r|  census  formula  statement\n";
        for (const auto& r : prof.rows) {
            os << "  " << r.r << "  " << r.a << "  " << r.b << "  " << r.c << "  " << r.elements_of_order.get_str() << "  "
               << r.census_coefficient.get_str() << "  " << r.formula_coefficient.get_str() << "  "
               << r.statement_coefficient.get_str() << (r.statement_agree ? "" : " (differs)") << "\n";
        }
    }
    os << "Q[G] =";
    bool first = true;
    for (const auto& c : full_components(profiles)) {
        os << (first ? " " : " + ") << c.multiplicity.get_str() << " " << field_name(c.d);
        first = false;
    }
    os << "\n";
    return os.str();
}

Json split_json(const AbelianGroupSpec& spec, const SplitResult& result) {
    Json out;
    out["group"] = spec.to_string();
    out["prime"] = result.prime;
    out["exponent"] = result.exponent;
    const auto m = ipow(result.prime, result.exponent);
    out["field"] = field_name(m);
    Json list = Json::array();
    for (const auto& s : result.pcis) {
        Json item;
        item["t"] = s.index;
        item["coeffs"] = to_json(s.element);
        list.push_back(std::move(item));
    }
    out["pcis"] = std::move(list);
    Json orbits = Json::array();
    for (const auto& o : galois_orbits(m)) orbits.push_back(o);
    out["orbits"] = std::move(orbits);
    Json collapsed = Json::array();
    for (const auto& e : result.collapsed) collapsed.push_back(to_json(e));
    out["collapsed"] = std::move(collapsed);
    return out;
}

std::string split_text(const AbelianGroupSpec& spec, const SplitResult& result) {
    std::ostringstream os;
    const auto m = ipow(result.prime, result.exponent);
    os << "group " << spec.to_string() << "  field " << field_name(m) << "  (z = zeta_" << m << ")\n";
    for (const auto& s : result.pcis) {
        os << "t=" << s.index << "\n";
        for (std::size_t g = 0; g < s.element.size(); ++g) os << "  x^" << g << ": " << cyclo_text(s.element[g]) << "\n";
    }
    const auto orbits = galois_orbits(m);
    for (std::size_t k = 0; k < result.collapsed.size(); ++k) {
        os << "orbit {";
        for (std::size_t i = 0; i < orbits[k].size(); ++i) os << (i ? "," : "") << orbits[k][i];
        os << "} -> " << coeff_line(result.collapsed[k]) << "\n";
    }
    return os.str();
}

Json report_json(const VerificationReport& report) {
    Json out;
    out["group"] = report.group;
    out["check_level"] = report.level == CheckLevel::Full ? "full" : "sampled";
    out["passed"] = report.passed();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = c.passed ? "pass" : "fail";
        cj["detail"] = c.detail;
        if (c.witness) cj["witness"] = *c.witness;
        checks.push_back(std::move(cj));
    }
    out["checks"] = std::move(checks);
    return out;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verify " << report.group << "  (" << (report.level == CheckLevel::Full ? "full" : "sampled") << ")\n";
    for (const auto& c : report.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail;
        if (c.witness) os << "  witness " << *c.witness;
        os << "\n";
    }
    os << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

}  // namespace abelpci
