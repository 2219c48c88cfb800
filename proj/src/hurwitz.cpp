#include "hmsector/hurwitz.hpp"

#include "hmsector/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hmsector {

HurwitzMatrix::HurwitzMatrix(std::vector<Rational> a, int M, HurwitzVariant variant)
    : a_(std::move(a)), step_(M), variant_(variant)
{
    if (M < 1)
        throw RangeError("Hurwitz step must be >= 1");
    if (a_.empty())
        throw std::invalid_argument("Hurwitz matrix of an empty coefficient list");
}

HurwitzMatrix::HurwitzMatrix(const RationalPolynomial& f, int M, HurwitzVariant variant)
    : HurwitzMatrix(f.coeffs(), M, variant)
{
}

HurwitzMatrix HurwitzMatrix::from_coefficients(std::vector<Rational> a, int M, HurwitzVariant variant)
{
    return HurwitzMatrix(std::move(a), M, variant);
}

int HurwitzMatrix::coefficient_index(int row, int col) const
{
    if (variant_ == HurwitzVariant::standard)
        return step_ * col - row;
    return step_ * (col - 1) - (row - 1);
}

Rational HurwitzMatrix::entry(int row, int col) const
{
    if (row < 1 || col < 1)
        throw std::out_of_range("Hurwitz matrix indices are 1-based");
    const int k = coefficient_index(row, col);
    if (k < 0 || k > degree())
        return 0;
    return a_[static_cast<std::size_t>(k)];
}

RationalMatrix HurwitzMatrix::block(std::span<const int> rows, std::span<const int> cols) const
{
    RationalMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = entry(rows[r], cols[c]);
    return out;
}

RationalMatrix HurwitzMatrix::leading_block(int rows, int cols) const
{
    RationalMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            out(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) = entry(r, c);
    return out;
}

Rational hm_entry(const RationalPolynomial& f, int M, HurwitzVariant variant, int row, int col)
{
    if (f.is_zero() || M < 1 || M > f.degree())
        throw RangeError("step M=" + std::to_string(M) + " outside 1..deg f");
    return HurwitzMatrix(f, M, variant).entry(row, col);
}

Rational minor_exact(const HurwitzMatrix& matrix, std::span<const int> rows, std::span<const int> cols)
{
    if (rows.size() != cols.size() || rows.empty())
        throw std::invalid_argument("minor needs equally sized, nonempty row and column sets");
    return determinant(matrix.block(rows, cols));
}

Rational hm_special(const HurwitzMatrix& matrix, int k, int r)
{
    if (r < 0 || k < 1)
        throw std::invalid_argument("special minor needs k >= 1, r >= 0");
    if (r == 0)
        return 1;
    IndexSet rows(static_cast<std::size_t>(r));
    IndexSet cols(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) {
        rows[static_cast<std::size_t>(t)] = k + t;
        cols[static_cast<std::size_t>(t)] = t + 1;
    }
    return minor_exact(matrix, rows, cols);
}

int special_minor_p(int M, int k, int r)
{
    return (M - 1) * (r - 1) + (M - k);
}

SpecialMinorIndex special_minor_index(int M, int p)
{
    if (M < 2 || p < 1)
        throw RangeError("special minor index needs M >= 2 and p >= 1");
    const int r = (p - 1) / (M - 1) + 1;
    const int k = M - (p - (M - 1) * (r - 1));
    return {p, k, r};
}

int special_minor_max_order(int n, int M, int k)
{
    return (n + k - 1) / (M - 1);
}

bool SpecialMinorSet::all_positive() const
{
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v > 0; });
}

SpecialMinorSet special_minors(const RationalPolynomial& f, int M)
{
    const int n = f.degree();
    if (f.is_zero() || M < 2 || M > n)
        throw RangeError("special minors need 2 <= M <= n");
    HurwitzMatrix h(f, M);
    SpecialMinorSet set;
    set.M = M;
    set.n = n;
    set.index.resize(static_cast<std::size_t>(n));
    set.values.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= M - 1; ++k) {
        for (int r = 1; r <= special_minor_max_order(n, M, k); ++r) {
            const int p = special_minor_p(M, k, r);
            set.index[static_cast<std::size_t>(p - 1)] = {p, k, r};
            set.values[static_cast<std::size_t>(p - 1)] = hm_special(h, k, r);
        }
    }
    return set;
}

namespace {

std::vector<IndexSet> combinations(int pool, int size)
{
    std::vector<IndexSet> out;
    if (size > pool || size < 1)
        return out;
    IndexSet current(static_cast<std::size_t>(size));
    for (int t = 0; t < size; ++t)
        current[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        out.push_back(current);
        int t = size - 1;
        while (t >= 0 && current[static_cast<std::size_t>(t)] == pool - size + t + 1)
            --t;
        if (t < 0)
            break;
        ++current[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < size; ++u)
            current[static_cast<std::size_t>(u)] = current[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

} // namespace

std::optional<MinorWitness> find_negative_minor(const HurwitzMatrix& matrix, int window_rows, int window_cols,
                                                int cap, unsigned threads)
{
    const RationalMatrix window = matrix.leading_block(window_rows, window_cols);
    const int max_order = std::min({cap, window_rows, window_cols});

    for (int order = 1; order <= max_order; ++order) {
        const auto row_sets = combinations(window_rows, order);
        const auto col_sets = combinations(window_cols, order);

        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best_row{std::numeric_limits<std::size_t>::max()};
        std::mutex best_mutex;
        std::optional<MinorWitness> best;
        std::size_t best_row_locked = std::numeric_limits<std::size_t>::max();

        auto worker = [&]() {
            RationalMatrix sub(static_cast<std::size_t>(order), static_cast<std::size_t>(order));
            while (true) {
                const std::size_t ri = next.fetch_add(1);
                if (ri >= row_sets.size() || ri > best_row.load())
                    return;
                const IndexSet& rows = row_sets[ri];
                for (const IndexSet& cols : col_sets) {
                    // A zero row makes the minor vanish; skip the determinant.
                    bool zero_line = false;
                    for (int a = 0; a < order && !zero_line; ++a) {
                        bool row_zero = true;
                        for (int b = 0; b < order; ++b) {
                            const Rational& v = window(static_cast<std::size_t>(rows[static_cast<std::size_t>(a)] - 1),
                                                       static_cast<std::size_t>(cols[static_cast<std::size_t>(b)] - 1));
                            sub(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = v;
                            if (v != 0)
                                row_zero = false;
                        }
                        zero_line = row_zero;
                    }
                    if (zero_line)
                        continue;
                    Rational value = determinant(sub);
                    if (value < 0) {
                        std::lock_guard lock(best_mutex);
                        if (ri < best_row_locked) {
                            best_row_locked = ri;
                            best = MinorWitness{rows, cols, value};
                            best_row.store(ri);
                        }
                        break;
                    }
                }
            }
        };

        const std::size_t work = row_sets.size() * col_sets.size();
        unsigned count = threads;
        if (count == 0)
            count = work < 4096 ? 1u : std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
        if (count <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < count; ++t)
                pool.emplace_back(worker);
        }
        if (best)
            return best;
    }
    return std::nullopt;
}

TNVerdict tn_verdict(const RationalPolynomial& f, int M, int cap)
{
    const int n = f.degree();
    if (f.is_zero() || M < 1 || M > n)
        throw RangeError("step M=" + std::to_string(M) + " outside 1..deg f");
    if (cap < 1)
        throw std::invalid_argument("minor-order cap must be >= 1");

    TNVerdict verdict;
    verdict.cap = cap;
    verdict.window_rows = n + M;
    verdict.window_cols = (n + M - 1) / M + 2;

    if (M >= 2) {
        verdict.special = special_minors(f, M);
        if (verdict.special->all_positive()) {
            verdict.status = TNStatus::tn_certified;
            verdict.method = TNMethod::special_minors_positive;
            return verdict;
        }
    }

    HurwitzMatrix h(f, M);
    if (auto witness = find_negative_minor(h, verdict.window_rows, verdict.window_cols, cap)) {
        verdict.status = TNStatus::not_tn;
        verdict.method = TNMethod::witness_found;
        verdict.witness = std::move(witness);
        return verdict;
    }
    verdict.status = TNStatus::inconclusive;
    verdict.method = TNMethod::exhaustive_cap;
    return verdict;
}

namespace {

void check_pair(int M, int i, int j)
{
    if (M < 2)
        throw RangeError("residue pairs need M >= 2");
    if (i == j)
        throw std::invalid_argument("residue pair needs i != j");
    if (i < 0 || j > M - 1 || i > j)
        throw RangeError("residue pair must satisfy 0 <= i < j <= M-1");
}

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int ceil_div(int a, int b)
{
    return -floor_div(-a, b);
}

} // namespace

int pair_degree_case_split(int n, int M, int i, int j)
{
    check_pair(M, i, j);
    const int fi = floor_div(n - i, M);
    if (fi == floor_div(n - j, M))
        return 2 * fi + 1;
    if (fi == ceil_div(n - j, M))
        return 2 * fi;
    throw std::logic_error("pair degree case split is not exhaustive");
}

int pair_degree_diagonal_count(int n, int M, int i, int j)
{
    check_pair(M, i, j);
    // Diagonal of H_M^{(ij)}: a_j, a_{M+i}, a_{M+j}, a_{2M+i}, ...
    int count = 0;
    for (int t = 1;; ++t) {
        const int index = (t % 2 == 1) ? ((t - 1) / 2) * M + j : (t / 2) * M + i;
        if (index > n)
            return count;
        ++count;
    }
}

PairLift pair_lift(const RationalPolynomial& f, int M, int i, int j)
{
    const int n = f.degree();
    if (f.is_zero() || M > n)
        throw RangeError("pair lifts need 2 <= M <= n");
    check_pair(M, i, j);
    const auto parts = split_arithmetic(f, M);
    if (parts[static_cast<std::size_t>(i)].poly.is_zero() && parts[static_cast<std::size_t>(j)].poly.is_zero())
        throw std::invalid_argument("both residue parts of the pair are zero");

    PairLift lift;
    lift.i = i;
    lift.j = j;
    lift.m = pair_degree_case_split(n, M, i, j);
    lift.coeffs.resize(static_cast<std::size_t>(lift.m) + 1);
    for (int t = 0; t <= lift.m; ++t) {
        const int index = (t % 2 == 0) ? (t / 2) * M + i : (t / 2) * M + j;
        lift.coeffs[static_cast<std::size_t>(t)] = f.a(index);
    }
    lift.alpha = Rational((n - i) % M, M);
    lift.beta = Rational((n - j) % M, M);
    lift.alpha.canonicalize();
    lift.beta.canonicalize();
    lift.epsilon = lift.m % 2;
    return lift;
}

IndexSet pair_rows(int M, int i, int j, int count)
{
    check_pair(M, i, j);
    IndexSet rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int t = 1; t <= count; ++t) {
        const int block = (t + 1) / 2;
        rows.push_back(t % 2 == 1 ? block * M - j : block * M - i);
    }
    return rows;
}

std::vector<Rational> pair_leading_minors(const RationalPolynomial& f, int M, int i, int j, int count)
{
    HurwitzMatrix h(f, M);
    const IndexSet rows = pair_rows(M, i, j, count);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 1; t <= count; ++t) {
        IndexSet r(rows.begin(), rows.begin() + t);
        IndexSet c(static_cast<std::size_t>(t));
        for (int u = 0; u < t; ++u)
            c[static_cast<std::size_t>(u)] = u + 1;
        out.push_back(minor_exact(h, r, c));
    }
    return out;
}

H2MinorIndex map_special_minor_to_h2(int M, int j, int r)
{
    if (M < 2 || M % 2 != 0)
        throw RangeError("special-minor transfer to H_2 needs an even step M");
    if (j < 1 || j > M - 1 || r < 1)
        throw RangeError("special-minor index needs 1 <= j <= M-1, r >= 1");
    const int k = M / 2;
    H2MinorIndex index;
    const int shift = (j % 2 == 1) ? (j - 1) / 2 : (j - 2) / 2;
    const int first_row = (j % 2 == 1) ? 1 : 2;
    for (int l = 1; l <= r; ++l) {
        index.rows.push_back(first_row + l - 1);
        index.cols.push_back(l * k - shift);
    }
    return index;
}

bool h2_minor_index_positive(const H2MinorIndex& index, int n)
{
    for (std::size_t l = 0; l < index.rows.size(); ++l) {
        const int k = 2 * index.cols[l] - index.rows[l];
        if (k < 0 || k > n)
            return false;
    }
    return true;
}

const char* to_string(TNStatus status)
{
    switch (status) {
    case TNStatus::tn_certified:
        return "TN_CERTIFIED";
    case TNStatus::not_tn:
        return "NOT_TN";
    case TNStatus::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

const char* to_string(TNMethod method)
{
    switch (method) {
    case TNMethod::special_minors_positive:
        return "SPECIAL_MINORS_POSITIVE";
    case TNMethod::exhaustive_cap:
        return "EXHAUSTIVE_CAP";
    case TNMethod::witness_found:
        return "WITNESS_FOUND";
    }
    return "?";
}

} // namespace hmsector
