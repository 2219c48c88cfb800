#pragma once

// Generalized Hurwitz matrices H_M = (a_{Mj-i}) and their tilde variant,
// exact minors, special minors, total-nonnegativity verdicts, and the
// two-residue submatrices H_M^{(ij)} with their lifted polynomials.
//
// Minor convention used everywhere: the first index set selects ROWS, the
// second selects COLUMNS. Indices are 1-based.

#include "hmsector/matrix.hpp"
#include "hmsector/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hmsector {

using IndexSet = std::vector<int>;

enum class HurwitzVariant {
    standard, // entry(i, j) = a_{Mj - i}
    tilde,    // entry(i, j) = a_{M(j-1) - (i-1)}; first row a_0, a_M, a_2M, ...
};

/// Lazy view of the infinite matrix. Entries outside the band are zero
/// (a_k = 0 for k < 0 or k > n).
class HurwitzMatrix {
public:
    /// Requires f nonzero and M >= 1. No upper bound on M is enforced here.
    HurwitzMatrix(const RationalPolynomial& f, int M, HurwitzVariant variant = HurwitzVariant::standard);

    /// Raw coefficients a_0..a_n; a zero a_0 is allowed (lifted pair polynomials).
    static HurwitzMatrix from_coefficients(std::vector<Rational> a, int M,
                                           HurwitzVariant variant = HurwitzVariant::standard);

    int step() const noexcept { return step_; }
    int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
    HurwitzVariant variant() const noexcept { return variant_; }
    const std::vector<Rational>& coefficients() const noexcept { return a_; }

    /// Coefficient index a_k stored at (row, col); may fall outside 0..n.
    int coefficient_index(int row, int col) const;

    /// Throws std::out_of_range for row < 1 or col < 1.
    Rational entry(int row, int col) const;

    RationalMatrix block(std::span<const int> rows, std::span<const int> cols) const;
    RationalMatrix leading_block(int rows, int cols) const;

private:
    HurwitzMatrix(std::vector<Rational> a, int M, HurwitzVariant variant);

    std::vector<Rational> a_;
    int step_;
    HurwitzVariant variant_;
};

/// Single entry with 1 <= M <= deg f enforced.
Rational hm_entry(const RationalPolynomial& f, int M, HurwitzVariant variant, int row, int col);

/// Exact minor with the given row and column sets (1-based, |rows| = |cols| >= 1).
Rational minor_exact(const HurwitzMatrix& matrix, std::span<const int> rows, std::span<const int> cols);

/// H_M(k, r): rows k..k+r-1, columns 1..r. H_M(k, 0) = 1.
Rational hm_special(const HurwitzMatrix& matrix, int k, int r);

/// Position of a special minor: p = (M-1)(r-1) + (M-k), 1 <= k <= M-1.
struct SpecialMinorIndex {
    int p = 0;
    int k = 0;
    int r = 0;
};

int special_minor_p(int M, int k, int r);
/// Inverse of special_minor_p for p >= 1 and M >= 2.
SpecialMinorIndex special_minor_index(int M, int p);
/// Largest r for the given k: floor((n + k - 1) / (M - 1)).
int special_minor_max_order(int n, int M, int k);

struct SpecialMinorSet {
    int M = 0;
    int n = 0;
    std::vector<SpecialMinorIndex> index; // index[p-1]
    std::vector<Rational> values;         // values[p-1] = Delta_p

    const Rational& delta(int p) const { return values.at(static_cast<std::size_t>(p - 1)); }
    bool all_positive() const;
};

/// Delta_1..Delta_n. Requires 2 <= M <= n.
SpecialMinorSet special_minors(const RationalPolynomial& f, int M);

enum class TNStatus { tn_certified, not_tn, inconclusive };
enum class TNMethod { special_minors_positive, exhaustive_cap, witness_found };

struct MinorWitness {
    IndexSet rows;
    IndexSet cols;
    Rational value;
};

struct TNVerdict {
    TNStatus status = TNStatus::inconclusive;
    TNMethod method = TNMethod::exhaustive_cap;
    std::optional<MinorWitness> witness;
    std::optional<SpecialMinorSet> special; // absent for M = 1
    int cap = 0;
    int window_rows = 0;
    int window_cols = 0;
};

/// Lexicographically first negative minor of order <= cap inside the leading
/// window_rows x window_cols block: smallest order first, then smallest row
/// set, then smallest column set. threads = 0 picks a default.
std::optional<MinorWitness> find_negative_minor(const HurwitzMatrix& matrix, int window_rows, int window_cols,
                                                int cap, unsigned threads = 0);

/// All Delta_p > 0 certifies TN; otherwise the window rows 1..n+M, columns
/// 1..ceil(n/M)+2 is searched for a negative minor up to order `cap`.
TNVerdict tn_verdict(const RationalPolynomial& f, int M, int cap = 4);

/// Lift of the residue pair (i, j): P^{(ij)} whose ordinary Hurwitz matrix is
/// the submatrix of H_M built from the rows of f_j and f_i.
struct PairLift {
    int i = 0;
    int j = 0;
    int m = 0;                   // degree index of the lift
    std::vector<Rational> coeffs; // p_0..p_m: p_{2k} = a_{kM+i}, p_{2k+1} = a_{kM+j}
    Rational alpha;               // frac((n-i)/M)
    Rational beta;                // frac((n-j)/M)
    int epsilon = 0;              // (1 - (-1)^m) / 2

    /// P^{(ij)} with any vanishing leading coefficients dropped.
    RationalPolynomial polynomial() const { return RationalPolynomial(coeffs); }
};

/// m from the floor/ceil case split. When (n-j)/M is an integer both cases
/// match; the odd branch is taken because a_{kM+j} is then still in range.
int pair_degree_case_split(int n, int M, int i, int j);

/// m as the count of in-range diagonal entries a_j, a_{M+i}, a_{M+j}, ...
int pair_degree_diagonal_count(int n, int M, int i, int j);

PairLift pair_lift(const RationalPolynomial& f, int M, int i, int j);

/// Rows of H_M that form H_M^{(ij)}: M-j, M-i, 2M-j, 2M-i, ...
IndexSet pair_rows(int M, int i, int j, int count);

/// Leading principal minors of H_M^{(ij)} of orders 1..count, as minors of H_M.
std::vector<Rational> pair_leading_minors(const RationalPolynomial& f, int M, int i, int j, int count);

/// Row and column sets of H_2 whose minor equals the special minor
/// H_M(j..j+r-1; 1..r) for even M = 2k.
struct H2MinorIndex {
    IndexSet rows;
    IndexSet cols;
};

H2MinorIndex map_special_minor_to_h2(int M, int j, int r);

/// Positivity rule for minors of the Hurwitz matrix of a stable degree-n
/// polynomial: positive iff 0 <= 2*col_l - row_l <= n for every l.
bool h2_minor_index_positive(const H2MinorIndex& index, int n);

const char* to_string(TNStatus status);
const char* to_string(TNMethod method);

} // namespace hmsector
