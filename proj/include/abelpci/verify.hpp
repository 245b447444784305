#pragma once

// Cross-check suite: engine vs oracle vs closed forms vs formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelpci/exactalg.hpp"
#include "abelpci/groupcore.hpp"
#include "abelpci/pcidiagram.hpp"

namespace abelpci {

enum class CheckLevel { Full, Sampled };

// Full pairwise checks run only up to this order; larger groups are sampled.
inline constexpr std::uint64_t kFullCheckLimit = 512;
// Splitting-field checks in run_verification stop above this cyclic order.
inline constexpr std::uint64_t kSplitCheckLimit = 32;
inline constexpr std::uint64_t kSampleSeed = 0x5eed'ab31'9c1dULL;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<std::string> witness;
};

// Every member idempotent, pairwise products zero, sum equal to 1. Sampled
// mode checks a fixed-seed pseudorandom subset of pairs.
CheckResult check_complete_orthogonal_set(const std::string& name, const std::vector<AlgebraElement>& set,
                                          CheckLevel level);

// One primed factor per nontrivial vertex, z a chain generator, tracked K
// equal to the stabilizer of the expansion, field index consistent.
CheckResult check_vertex_kernels(const PciDiagram& diagram);

// Each level is a complete set of orthogonal idempotents of Q[G_l].
CheckResult check_level_soundness(const PciDiagram& diagram, CheckLevel level);

// Closed-form PCIs of C_{p^n}: n+1 members, equal to the diagram
// leaves, field index of e_i equal to n+1-i.
CheckResult check_cyclic_closed_form(std::uint64_t p, unsigned n);

// Splitting-field PCIs of C_{p^n}: p^n rank-one orthogonal idempotents summing
// to 1, reproduced by extension_children of level n-1, collapsing to the
// rational PCIs in n+1 orbits.
CheckResult check_splitting_field(std::uint64_t p, unsigned n);

// A few deterministic power-monotone orders other than the canonical one.
std::vector<std::vector<LongGenerator>> alternate_orders(const PrimaryGroupSpec& spec);

struct VerifyOptions {
    std::uint64_t max_order = kDefaultMaxOrder;
    CheckLevel level = CheckLevel::Full;
    bool alternate_orders = false;
    std::optional<std::vector<LongGenerator>> order;  // primary specs only
};

struct VerificationReport {
    std::string group;
    CheckLevel level = CheckLevel::Full;
    std::vector<CheckResult> checks;
    bool passed() const;
};

VerificationReport run_verification(const AbelianGroupSpec& spec, const VerifyOptions& options);

}  // namespace abelpci
