#include "lips/rational.hpp"

#include <cctype>

#include "lips/error.hpp"

namespace lips {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_literal(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_literal(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        value = Rational(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad_literal(text);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
            bad_literal(text);
        }
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(digits.empty() ? "0" : digits, 10), scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) bad_literal(text);
        value = Rational(mpz_class(std::string(s), 10));
    }
    if (negative) value = -value;
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace lips
