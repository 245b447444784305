#include "abelpci/rational.hpp"

#include "abelpci/errors.hpp"

namespace abelpci {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational make_rational(std::int64_t num, std::uint64_t den) {
    if (den == 0) throw InputError("zero denominator");
    Integer n;
    Integer d;
    mpz_set_si(n.get_mpz_t(), num);
    mpz_set_ui(d.get_mpz_t(), den);
    return make_rational(n, d);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num_text) || !is_integer_text(den_text)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    auto strip = [](std::string_view s) {
        return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
    };
    Integer num(strip(num_text));
    Integer den(strip(den_text));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

}  // namespace abelpci
