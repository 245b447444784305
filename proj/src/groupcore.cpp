#include "abelpci/groupcore.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "abelpci/errors.hpp"

namespace abelpci {

namespace {

constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 32;

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (result > kMaxGroupOrder / base) {
            throw InputError("group order exceeds 2^32");
        }
        result *= base;
    }
    return result;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
    s = trim(s);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PrimaryGroupSpec

PrimaryGroupSpec::PrimaryGroupSpec(std::uint64_t prime, std::vector<ExponentClass> classes)
    : prime_(prime), classes_(std::move(classes)) {
    if (!is_prime(prime_)) {
        throw InputError("not a prime: " + std::to_string(prime_));
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const auto& c = classes_[i];
        if (c.exponent == 0 || c.multiplicity == 0) {
            throw InputError("exponents and multiplicities must be positive");
        }
        if (i > 0 && classes_[i - 1].exponent <= c.exponent) {
            throw InputError("exponent classes must be strictly decreasing");
        }
        rank_ += c.exponent * c.multiplicity;
    }
    checked_pow(prime_, rank_);
}

PrimaryGroupSpec PrimaryGroupSpec::from_exponents(std::uint64_t prime,
                                                  std::vector<unsigned> exponents) {
    std::map<unsigned, unsigned, std::greater<>> counts;
    for (unsigned e : exponents) {
        if (e == 0) throw InputError("exponents must be positive");
        ++counts[e];
    }
    std::vector<ExponentClass> classes;
    for (auto [e, l] : counts) classes.push_back({e, l});
    return PrimaryGroupSpec(prime, std::move(classes));
}

unsigned PrimaryGroupSpec::max_exponent() const noexcept {
    return classes_.empty() ? 0 : classes_.front().exponent;
}

std::uint64_t PrimaryGroupSpec::order() const { return checked_pow(prime_, rank_); }

std::vector<CyclicFactor> PrimaryGroupSpec::factors() const {
    std::vector<CyclicFactor> out;
    for (const auto& c : classes_) {
        for (unsigned j = 1; j <= c.multiplicity; ++j) {
            out.push_back({prime_, c.exponent, j, checked_pow(prime_, c.exponent)});
        }
    }
    return out;
}

unsigned PrimaryGroupSpec::multiplicity_of(unsigned exponent) const noexcept {
    for (const auto& c : classes_) {
        if (c.exponent == exponent) return c.multiplicity;
    }
    return 0;
}

bool PrimaryGroupSpec::is_cyclic() const noexcept {
    return classes_.empty() || (classes_.size() == 1 && classes_[0].multiplicity == 1);
}

std::string PrimaryGroupSpec::to_string() const {
    std::ostringstream os;
    os << prime_ << ":[";
    bool first = true;
    for (const auto& c : classes_) {
        for (unsigned j = 0; j < c.multiplicity; ++j) {
            if (!first) os << ',';
            os << c.exponent;
            first = false;
        }
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// AbelianGroupSpec

AbelianGroupSpec::AbelianGroupSpec(std::vector<PrimaryGroupSpec> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.prime() < b.prime(); });
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i - 1].prime() == parts_[i].prime()) {
            throw InputError("duplicate prime " + std::to_string(parts_[i].prime()) +
                             " in group spec");
        }
    }
    order();
}

AbelianGroupSpec AbelianGroupSpec::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InputError("empty group spec");
    std::vector<PrimaryGroupSpec> parts;
    for (auto part : split(text, ';')) {
        part = trim(part);
        auto colon = part.find(':');
        if (colon == std::string_view::npos) {
            throw InputError("group spec part needs 'prime:[...]': '" + std::string(part) + "'");
        }
        std::uint64_t prime = parse_uint(part.substr(0, colon), "prime");
        auto body = trim(part.substr(colon + 1));
        if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
            throw InputError("exponent list must be bracketed: '" + std::string(part) + "'");
        }
        body = trim(body.substr(1, body.size() - 2));
        std::vector<unsigned> exps;
        if (!body.empty()) {
            for (auto tok : split(body, ',')) {
                auto e = parse_uint(tok, "exponent");
                if (e == 0 || e > 64) throw InputError("exponent out of range: " + std::to_string(e));
                exps.push_back(static_cast<unsigned>(e));
            }
        }
        parts.push_back(PrimaryGroupSpec::from_exponents(prime, std::move(exps)));
    }
    return AbelianGroupSpec(std::move(parts));
}

std::uint64_t AbelianGroupSpec::order() const {
    std::uint64_t result = 1;
    for (const auto& p : parts_) {
        auto o = p.order();
        if (result > kMaxGroupOrder / o) throw InputError("group order exceeds 2^32");
        result *= o;
    }
    return result;
}

std::string AbelianGroupSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ';';
        out += parts_[i].to_string();
    }
    return out;
}

std::string to_string(const LongGenerator& g) {
    return "x_{(" + std::to_string(g.exponent) + "," + std::to_string(g.copy) + ")," +
           std::to_string(g.power) + "}";
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(AbelianGroupSpec spec) : spec_(std::move(spec)) {
    for (const auto& part : spec_.parts()) {
        for (const auto& f : part.factors()) factors_.push_back(f);
    }
    order_ = spec_.order();
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * factors_[i].order;
    }
    for (const auto& f : factors_) exponent_ = std::lcm(exponent_, f.order);
}

AbelianGroup::AbelianGroup(const PrimaryGroupSpec& spec)
    : AbelianGroup(AbelianGroupSpec({spec})) {}

std::uint64_t AbelianGroup::prime() const {
    if (!is_primary()) throw InputError("group is not a p-group: " + spec_.to_string());
    return spec_.parts().front().prime();
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{std::vector<std::uint64_t>(factors_.size(), 0)};
}

bool AbelianGroup::contains(const GroupElement& g) const noexcept {
    if (g.exps.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (g.exps[i] >= factors_[i].order) return false;
    }
    return true;
}

void AbelianGroup::validate(const GroupElement& g) const {
    if (!contains(g)) {
        throw InputError("element " + format(g) + " does not belong to " + spec_.to_string());
    }
}

GroupElement AbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
    validate(a);
    validate(b);
    GroupElement out = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out.exps[i] = (a.exps[i] + b.exps[i]) % factors_[i].order;
    }
    return out;
}

GroupElement AbelianGroup::inverse(const GroupElement& a) const {
    validate(a);
    GroupElement out = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out.exps[i] = (factors_[i].order - a.exps[i]) % factors_[i].order;
    }
    return out;
}

GroupElement AbelianGroup::power(const GroupElement& a, std::uint64_t k) const {
    validate(a);
    GroupElement out = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto n = factors_[i].order;
        out.exps[i] = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a.exps[i]) * (k % n)) % n);
    }
    return out;
}

std::uint64_t AbelianGroup::element_order(const GroupElement& g) const {
    validate(g);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto n = factors_[i].order;
        result = std::lcm(result, n / std::gcd(n, g.exps[i]));
    }
    return result;
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const {
    validate(g);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx += g.exps[i] * strides_[i];
    return idx;
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
    if (index >= order_) throw InputError("element index out of range");
    GroupElement g = identity();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        g.exps[i] = index / strides_[i];
        index %= strides_[i];
    }
    return g;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::size_t AbelianGroup::mul_index(std::size_t a, std::size_t b) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto n = factors_[i].order;
        const auto ea = a / strides_[i];
        const auto eb = b / strides_[i];
        a %= strides_[i];
        b %= strides_[i];
        idx += ((ea + eb) % n) * strides_[i];
    }
    return idx;
}

std::string AbelianGroup::format(const GroupElement& g) const {
    std::string out = "(";
    for (std::size_t i = 0; i < g.exps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.exps[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Long presentation

std::vector<LongGenerator> long_generator_sequence(const PrimaryGroupSpec& spec) {
    std::vector<LongGenerator> out;
    for (const auto& c : spec.classes()) {
        for (unsigned j = c.multiplicity; j >= 1; --j) {
            for (unsigned a = 1; a <= c.exponent; ++a) out.push_back({c.exponent, j, a});
        }
    }
    return out;
}

GroupElement embed_generator(const PrimaryGroupSpec& spec, const LongGenerator& g) {
    const auto factors = spec.factors();
    GroupElement out{std::vector<std::uint64_t>(factors.size(), 0)};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.exponent == g.exponent && f.copy == g.copy) {
            if (g.power < 1 || g.power > g.exponent) break;
            out.exps[i] = checked_pow(spec.prime(), g.exponent - g.power);
            return out;
        }
    }
    throw InputError("generator " + to_string(g) + " is not part of " + spec.to_string());
}

bool is_power_monotone(const PrimaryGroupSpec& spec, const std::vector<LongGenerator>& order) {
    std::map<std::pair<unsigned, unsigned>, unsigned> next_power;
    for (const auto& f : spec.factors()) next_power[{f.exponent, f.copy}] = 1;
    for (const auto& g : order) {
        auto it = next_power.find({g.exponent, g.copy});
        if (it == next_power.end() || it->second != g.power || g.power > g.exponent) return false;
        ++it->second;
    }
    for (const auto& f : spec.factors()) {
        if (next_power[{f.exponent, f.copy}] != f.exponent + 1) return false;
    }
    return true;
}

std::vector<LongGenerator> parse_generator_order(const PrimaryGroupSpec& spec,
                                                 std::string_view text) {
    std::vector<LongGenerator> out;
    for (auto tok : split(trim(text), ',')) {
        auto fields = split(trim(tok), '.');
        if (fields.size() != 3) {
            throw InputError("generator order entries are 's.j.a': '" + std::string(tok) + "'");
        }
        out.push_back({static_cast<unsigned>(parse_uint(fields[0], "exponent")),
                       static_cast<unsigned>(parse_uint(fields[1], "copy index")),
                       static_cast<unsigned>(parse_uint(fields[2], "power index"))});
    }
    if (!is_power_monotone(spec, out)) {
        throw InputError("generator order is not a power-monotone order of all long generators of " +
                         spec.to_string());
    }
    return out;
}

std::vector<std::size_t> subgroup_closure_indices(const AbelianGroup& group,
                                                  const std::vector<GroupElement>& gens) {
    std::vector<std::size_t> gen_idx;
    for (const auto& g : gens) gen_idx.push_back(group.index_of(g));
    std::vector<char> seen(group.order(), 0);
    std::vector<std::size_t> members{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (auto gi : gen_idx) {
            auto next = group.mul_index(members[head], gi);
            if (!seen[next]) {
                seen[next] = 1;
                members.push_back(next);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<GroupElement> subgroup_closure(const AbelianGroup& group,
                                           const std::vector<GroupElement>& gens) {
    std::vector<GroupElement> out;
    for (auto i : subgroup_closure_indices(group, gens)) out.push_back(group.element_at(i));
    return out;
}

}  // namespace abelpci
