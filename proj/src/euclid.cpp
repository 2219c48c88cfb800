#include "hmsector/euclid.hpp"

#include "hmsector/errors.hpp"

#include <algorithm>

namespace hmsector {

std::vector<std::vector<int>> EuclidTable::rows() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        for (int i = j; i <= n; i += M)
            out[static_cast<std::size_t>(j)].push_back(i);
    return out;
}

EuclidTable run_generalized_euclid(const RationalPolynomial& f, int M)
{
    const int n = f.degree();
    if (f.is_zero() || n < 2)
        throw RangeError("generalized Euclidean algorithm needs degree >= 2");
    if (M < 2 || M > n)
        throw RangeError("step M=" + std::to_string(M) + " outside 2.." + std::to_string(n));

    EuclidTable table;
    table.M = M;
    table.n = n;
    table.polys.reserve(static_cast<std::size_t>(n) + 1);
    for (auto& part : split_arithmetic(f, M))
        table.polys.push_back(std::move(part.poly));

    for (int i = 0; i + M <= n; ++i) {
        const RationalPolynomial& fi = table.polys[static_cast<std::size_t>(i)];
        const RationalPolynomial& next = table.polys[static_cast<std::size_t>(i + 1)];
        if (next.is_zero()) {
            table.quotients.emplace_back();
            table.rules.push_back(EuclidRule::copy_zero_divisor);
            table.polys.push_back(fi);
        } else if (fi.degree() < next.degree()) {
            table.quotients.emplace_back();
            table.rules.push_back(EuclidRule::copy_lower_degree);
            table.polys.push_back(fi);
        } else {
            auto [quotient, remainder] = divide(fi, next);
            table.quotients.push_back(std::move(quotient));
            table.rules.push_back(EuclidRule::divide);
            table.polys.push_back(std::move(remainder));
        }
    }

    table.leading.reserve(table.polys.size());
    for (const auto& p : table.polys)
        table.leading.push_back(p.leading());
    table.nondegenerate = std::none_of(table.polys.begin(), table.polys.end(),
                                       [](const RationalPolynomial& p) { return p.is_zero(); });
    return table;
}

std::vector<Rational> leading_coefficients(const EuclidTable& table)
{
    return table.leading;
}

bool all_leading_positive(const EuclidTable& table)
{
    return std::all_of(table.leading.begin(), table.leading.end(), [](const Rational& h) { return h > 0; });
}

NondegeneracyReport check_nondegenerate(const EuclidTable& table)
{
    NondegeneracyReport report;
    for (std::size_t i = 0; i < table.polys.size(); ++i) {
        if (table.polys[i].is_zero()) {
            report.first_zero = static_cast<int>(i);
            break;
        }
    }
    report.nondegenerate = !report.first_zero.has_value();

    report.degrees_match = true;
    for (std::size_t k = 0; k < table.polys.size(); ++k)
        if (table.polys[k].degree() != table.n - static_cast<int>(k))
            report.degrees_match = false;

    report.quotients_linear = std::all_of(table.quotients.begin(), table.quotients.end(), [](const RationalPolynomial& d) {
        return d.degree() == 1 && d.coefficient_of_power(0) == 0;
    });
    return report;
}

const char* to_string(EuclidRule rule)
{
    switch (rule) {
    case EuclidRule::divide:
        return "divide";
    case EuclidRule::copy_lower_degree:
        return "copy_lower_degree";
    case EuclidRule::copy_zero_divisor:
        return "copy_zero_divisor";
    }
    return "?";
}

} // namespace hmsector
