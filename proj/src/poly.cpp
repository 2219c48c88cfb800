#include "hmsector/poly.hpp"

#include "hmsector/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hmsector {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    coeffs_.erase(coeffs_.begin(), first);
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("monomial exponent must be nonnegative");
    if (c == 0)
        return {};
    std::vector<Rational> coeffs(static_cast<std::size_t>(exponent) + 1);
    coeffs[0] = c;
    return RationalPolynomial(std::move(coeffs));
}

Rational RationalPolynomial::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

Rational RationalPolynomial::coefficient_of_power(int e) const
{
    const int n = degree();
    if (is_zero() || e < 0 || e > n)
        return 0;
    return coeffs_[static_cast<std::size_t>(n - e)];
}

Rational RationalPolynomial::a(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::vector<double> RationalPolynomial::to_doubles() const
{
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.get_d());
    return out;
}

std::string RationalPolynomial::to_text() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    const int n = degree();
    bool first = true;
    for (int k = 0; k <= n; ++k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        const int e = n - k;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "x";
        if (e > 1)
            os << "^" << e;
    }
    return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs)
{
    const std::size_t size = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
    std::vector<Rational> out(size);
    const std::size_t lo = size - lhs.coeffs_.size();
    const std::size_t ro = size - rhs.coeffs_.size();
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        out[lo + i] += lhs.coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[ro + i] += rhs.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p)
{
    if (c == 0)
        return {};
    std::vector<Rational> out = p.coeffs_;
    for (auto& v : out)
        v *= c;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs)
{
    return lhs + Rational(-1) * rhs;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
}

DivisionResult divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor)
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    const int dd = divisor.degree();
    if (dividend.degree() < dd)
        return {RationalPolynomial(), dividend};

    std::vector<Rational> rem = dividend.coeffs();
    const auto& den = divisor.coeffs();
    const int steps = dividend.degree() - dd + 1;
    std::vector<Rational> quot(static_cast<std::size_t>(steps));
    const Rational lead = den.front();
    for (int k = 0; k < steps; ++k) {
        const Rational& top = rem[static_cast<std::size_t>(k)];
        if (top == 0)
            continue;
        Rational q = top / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (std::size_t t = 0; t < den.size(); ++t)
            rem[static_cast<std::size_t>(k) + t] -= q * den[t];
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

namespace {

std::vector<std::string> tokens_from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON coefficient array: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("JSON polynomial must be an array of coefficients");
    std::vector<std::string> tokens;
    for (const auto& item : doc) {
        if (item.is_string())
            tokens.push_back(item.get<std::string>());
        else if (item.is_number_integer())
            tokens.push_back(item.dump());
        else
            throw ParseError("JSON coefficients must be strings (or integers), got " + item.dump());
    }
    return tokens;
}

std::vector<std::string> tokens_from_csv(std::string_view text)
{
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        tokens.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return tokens;
}

} // namespace

RationalPolynomial parse_polynomial(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError("empty coefficient list");
    text.remove_prefix(first);

    const std::vector<std::string> tokens = text.front() == '[' ? tokens_from_json(text) : tokens_from_csv(text);
    if (tokens.empty())
        throw ParseError("empty coefficient list");

    std::vector<Rational> coeffs;
    coeffs.reserve(tokens.size());
    for (const auto& t : tokens)
        coeffs.push_back(parse_rational(t));
    if (coeffs.front() == 0)
        throw ParseError("leading coefficient is zero");
    return RationalPolynomial(std::move(coeffs));
}

std::vector<ArithmeticPart> split_arithmetic(const RationalPolynomial& f, int M)
{
    if (f.is_zero())
        throw std::invalid_argument("cannot split the zero polynomial");
    const int n = f.degree();
    if (M < 1 || M > n)
        throw RangeError("step M=" + std::to_string(M) + " outside 1.." + std::to_string(n));

    std::vector<ArithmeticPart> parts;
    parts.reserve(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        for (int l = j; l <= n; l += M)
            coeffs[static_cast<std::size_t>(l)] = f.coeffs()[static_cast<std::size_t>(l)];
        parts.push_back({j, M, RationalPolynomial(std::move(coeffs))});
    }
    return parts;
}

bool has_residue(const RationalPolynomial& p, int n, int M, int residue)
{
    if (p.is_zero())
        return true;
    const int d = p.degree();
    for (int e = 0; e <= d; ++e) {
        if (p.coefficient_of_power(e) == 0)
            continue;
        const int l = n - e;
        if (((l - residue) % M + M) % M != 0)
            return false;
    }
    return true;
}

bool is_arithmetic(const RationalPolynomial& p, int M)
{
    return p.is_zero() || has_residue(p, p.degree(), M, 0);
}

std::complex<double> evaluate_complex(std::span<const double> coeffs, std::complex<double> z)
{
    std::complex<double> acc{0.0, 0.0};
    for (double c : coeffs)
        acc = acc * z + c;
    return acc;
}

std::complex<double> evaluate_complex(const RationalPolynomial& f, std::complex<double> z)
{
    const auto coeffs = f.to_doubles();
    return evaluate_complex(std::span<const double>(coeffs), z);
}

} // namespace hmsector
