#include "abelpci/shell.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"

#include "abelpci/errors.hpp"
#include "abelpci/oracle.hpp"
#include "abelpci/serialize.hpp"

namespace abelpci {

namespace {

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::optional<std::vector<LongGenerator>> order_override(const RunConfig& config, const AbelianGroupSpec& spec) {
    if (!config.order) return std::nullopt;
    if (!spec.is_primary()) throw InputError("--order applies to p-group specs only");
    return parse_generator_order(spec.parts().front(), *config.order);
}

std::vector<PciDiagram> build_diagrams(const RunConfig& config, const AbelianGroupSpec& spec) {
    const auto order = order_override(config, spec);
    std::vector<PciDiagram> out;
    for (const auto& part : spec.parts()) out.push_back(build_pci_diagram(part, {order, config.max_order}));
    return out;
}

RunResult run_checked(const RunConfig& config) {
    if (config.max_order < 1) throw InputError("--max-order must be at least 1");
    if (config.format == OutputFormat::Dot && config.subcommand != "diagram") {
        throw InputError("dot output is only available for the diagram subcommand");
    }
    static const char* known[] = {"pci", "diagram", "wedderburn", "split", "verify"};
    if (std::find(std::begin(known), std::end(known), config.subcommand) == std::end(known)) {
        throw InputError("unknown subcommand '" + config.subcommand + "'");
    }
    const auto spec = AbelianGroupSpec::parse(config.group_spec);
    if (spec.order() > config.max_order) {
        throw InputError("group order " + std::to_string(spec.order()) + " exceeds --max-order " +
                         std::to_string(config.max_order));
    }
    const bool json = config.format == OutputFormat::Json;
    RunResult res;

    if (config.subcommand == "pci") {
        const auto order = order_override(config, spec);
        std::vector<PrimaryPciSet> sets;
        for (const auto& part : spec.parts()) {
            const auto d = build_pci_diagram(part, {order, config.max_order});
            PrimaryPciSet s{d.group(), d.leaf_idempotents(), {}};
            for (const auto& v : d.leaves()) s.field_indices.push_back(v.field_index);
            sets.push_back(std::move(s));
        }
        const auto pcis = cross_prime_product(make_group(spec), sets);
        res.output = json ? render(pci_list_json(spec, pcis)) : pci_list_text(spec, pcis);
    } else if (config.subcommand == "diagram") {
        const auto diagrams = build_diagrams(config, spec);
        if (config.format == OutputFormat::Dot) {
            res.output = diagram_dot(spec, diagrams);
        } else {
            res.output = json ? render(diagram_json(spec, diagrams)) : diagram_text(spec, diagrams);
        }
    } else if (config.subcommand == "wedderburn") {
        std::vector<WedderburnProfile> profiles;
        try {
            for (const auto& part : spec.parts()) profiles.push_back(wedderburn_profile(part));
        } catch (const VerificationFailure& ex) {
            return {kExitVerificationFailed, "", ex.what()};
        }
        res.output = json ? render(wedderburn_json(spec, profiles)) : wedderburn_text(spec, profiles);
    } else if (config.subcommand == "split") {
        if (!spec.is_primary() || !spec.parts().front().is_cyclic()) {
            throw InputError("split needs a cyclic p-group spec such as 3:[2]");
        }
        const auto& part = spec.parts().front();
        SplitResult sr;
        sr.prime = part.prime();
        sr.exponent = part.max_exponent();
        sr.pcis = splitting_field_pcis(sr.prime, sr.exponent, config.max_order);
        sr.collapsed = galois_orbit_collapse(sr.pcis, part.order());
        res.output = json ? render(split_json(spec, sr)) : split_text(spec, sr);
    } else {
        VerifyOptions opts;
        opts.max_order = config.max_order;
        opts.level = config.check_level;
        opts.alternate_orders = config.alternate_order;
        opts.order = order_override(config, spec);
        const auto report = run_verification(spec, opts);
        res.output = json ? render(report_json(report)) : report_text(report);
        if (!report.passed()) res.exit_code = kExitVerificationFailed;
    }
    return res;
}

}  // namespace

RunResult run(const RunConfig& config) {
    try {
        return run_checked(config);
    } catch (const InputError& ex) {
        return {kExitInvalidInput, "", ex.what()};
    } catch (const InvariantError& ex) {
        return {kExitVerificationFailed, "", std::string("invariant violated: ") + ex.what()};
    } catch (const VerificationFailure& ex) {
        return {kExitVerificationFailed, "", ex.what()};
    }
}

RunResult run_cli(int argc, const char* const* argv) {
    CLI::App app{"Primitive central idempotents of rational group algebras of finite abelian groups", "abelpci"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "abelpci 1.0");

    RunConfig config;
    std::string format = "json";
    std::string level = "full";
    std::string order;

    const std::pair<const char*, const char*> commands[] = {
        {"pci", "primitive central idempotents with exact coefficients"},
        {"diagram", "PCI-diagram along the composition chain"},
        {"wedderburn", "Wedderburn components and coefficient table"},
        {"split", "splitting-field idempotents of a cyclic p-group"},
        {"verify", "cross-check engine, oracle and formulas"},
    };
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("-g,--group", config.group_spec, "group spec, e.g. \"2:[2,1];3:[1]\"")->required();
        sub->add_option("-f,--format", format, "json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        sub->add_option("--max-order", config.max_order, "largest group order accepted")->check(CLI::PositiveNumber);
        sub->add_option("--check-level", level, "full or sampled")->check(CLI::IsMember({"full", "sampled"}));
        sub->add_flag("--alternate-order", config.alternate_order, "also verify non-canonical generator orders");
        sub->add_option("--order", order, "generator order override \"s.j.a,...\" (p-groups)");
    }

    std::ostringstream out;
    std::ostringstream err;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return {code == 0 ? kExitOk : kExitInvalidInput, out.str(), err.str()};
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = format == "text" ? OutputFormat::Text : format == "dot" ? OutputFormat::Dot : OutputFormat::Json;
    config.check_level = level == "sampled" ? CheckLevel::Sampled : CheckLevel::Full;
    if (!order.empty()) config.order = order;
    return run(config);
}

}  // namespace abelpci
