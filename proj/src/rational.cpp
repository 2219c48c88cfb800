#include "hmsector/rational.hpp"

#include "hmsector/errors.hpp"

#include <cctype>

namespace hmsector {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view body, std::string_view original)
{
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = body.substr(0, epos);
        std::string_view exp_text = body.substr(epos + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6)
            throw ParseError("malformed exponent in coefficient '" + std::string(original) + "'");
        exponent = std::stol(std::string(exp_text));
        if (exp_negative)
            exponent = -exponent;
    }

    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw ParseError("malformed coefficient '" + std::string(original) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw ParseError("malformed coefficient '" + std::string(original) + "'");

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;

    Rational value;
    if (scale >= 0) {
        value = Rational(numerator, pow10(static_cast<unsigned long>(scale)));
    } else {
        value = Rational(numerator * pow10(static_cast<unsigned long>(-scale)));
    }
    value.canonicalize();
    return value;
}

} // namespace

Rational parse_rational(std::string_view token)
{
    const std::string_view original = token;
    token = trim(token);
    if (token.empty())
        throw ParseError("empty coefficient");
    if (token.find("...") != std::string_view::npos)
        throw ParseError("repeating decimals unsupported in '" + std::string(original)
                         + "'; write the exact fraction instead, e.g. \"1/9\"");

    bool negative = false;
    if (token.front() == '+' || token.front() == '-') {
        negative = token.front() == '-';
        token.remove_prefix(1);
    }
    if (token.empty())
        throw ParseError("malformed coefficient '" + std::string(original) + "'");

    Rational value;
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(token.substr(0, slash));
        std::string_view den = trim(token.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(original) + "'");
        mpz_class q(std::string(den), 10);
        if (q == 0)
            throw ParseError("zero denominator in '" + std::string(original) + "'");
        value = Rational(mpz_class(std::string(num), 10), q);
        value.canonicalize();
    } else if (all_digits(token)) {
        value = Rational(mpz_class(std::string(token), 10));
    } else {
        value = parse_decimal(token, original);
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::vector<std::string> to_strings(const std::vector<Rational>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(to_string(v));
    return out;
}

} // namespace hmsector
