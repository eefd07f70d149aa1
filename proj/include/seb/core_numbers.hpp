#pragma once

#include <utility>
#include <vector>

#include "seb/bigint.hpp"
#include "seb/report.hpp"

namespace seb {

/// Pascal-triangle table of binomial coefficients.
class BinomialTable {
public:
    explicit BinomialTable(int n_max);
    const BigInt& at(int n, int k) const;  // 0 outside 0 <= k <= n
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
};

BigInt binomial(int n, int k);
BigInt factorial(int n);

/// Triangle of type A Eulerian numbers A(n,k) built by the two-term
/// recurrence from A(0,0) = 1. Lookups outside 0 <= k <= n return 0.
class EulerianATable {
public:
    explicit EulerianATable(int n_max);
    const BigInt& at(int n, int k) const;
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// Triangle of type B Eulerian numbers B(n,k).
class EulerianBTable {
public:
    explicit EulerianBTable(int n_max);
    const BigInt& at(int n, int k) const;
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// B(n,k,j): type B permutations with k descents and j minus signs.
/// Built bottom-up by the four-term recurrence from B(0,0,0) = 1 with the
/// zero convention off the index cube; no closed-form fast paths, so the
/// recurrence is what gets tested and the formula stays an independent check.
class BigBTable {
public:
    explicit BigBTable(int n_max);
    const BigInt& at(int n, int k, int j) const;  // 0 off-range
    int n_max() const { return static_cast<int>(layers_.size()) - 1; }

private:
    // layers_[n][k][j]
    std::vector<std::vector<std::vector<BigInt>>> layers_;
};

/// b(n,k,j) = B(n,k,j) / C(n,j), built by its own integer recurrences
/// (the j-preserving one for j < n, the j-shifting one for j = n).
class LittleBTable {
public:
    explicit LittleBTable(int n_max);
    const BigInt& at(int n, int k, int j) const;
    int n_max() const { return static_cast<int>(layers_.size()) - 1; }

private:
    std::vector<std::vector<std::vector<BigInt>>> layers_;
};

// ---- single-value operations ----

BigInt eulerian_a(int n, int k);  // recurrence; total with zero convention
BigInt eulerian_a_formula(int n, int k);  // alternating sum; requires 0 <= k <= n
BigInt eulerian_b(int n, int k);
BigInt eulerian_b_formula(int n, int k);
BigInt big_b(int n, int k, int j);
BigInt big_b_formula(int n, int k, int j);  // requires 0 <= k,j <= n
BigInt little_b(int n, int k, int j);
BigInt little_b_formula(int n, int k, int j);  // requires 0 <= k,j <= n; 0^0 = 1

/// B(n,k,j) / C(n,j); throws std::logic_error if the division is not exact.
BigInt divisibility_witness(int n, int k, int j);

/// (sum of B(n,k,j) over even j, over odd j); throws std::logic_error if the
/// pair disagrees with (B(n,k) +- (-1)^k C(n,k)) / 2.
std::pair<BigInt, BigInt> parity_sums(int n, int k);

// ---- verification sweeps ----

/// Closed formulas vs recurrence tables, the alternative little-b routes,
/// boundary rows/columns and the B(n,1,j) special values.
Report check_closed_forms(int n_max);

/// B(n,k,j) = B(n,n-k,n-j), b(n,k,j) = b(n,n-k,n-j), and the first-difference
/// identity for b.
Report check_symmetries(int n_max);

/// Row/column sums: over j to B(n,k) and A(n+1,k), over k to C(n,j)n! and n!.
Report check_sum_formulas(int n_max);

Report check_parity_sums(int n_max);

/// C(n,j) divides B(n,k,j) with quotient b(n,k,j), all cells.
Report check_divisibility(int n_max);

/// B(n,k,j)^2 k(n-k) >= B(n,k-1,j)B(n,k+1,j)(k+1)(n-k+1) for 0 < k < n.
Report check_log_concavity(int n_max);

/// Cleared-denominator form of the fractional recurrences for B(n,k,j).
Report check_fractional_recurrences(int n_max);

/// Lexicographic unimodality of b(n,.,.) under the order that reads row k
/// from j = n down to 0 and then moves to row k+1. Verifies the two families
/// of weak inequalities with their strictness exceptions, full unimodality,
/// and locates the argmax; for odd n the two candidate coordinate readings
/// of the maximum are reported as notes, not asserted.
Report check_lexicographic_unimodality(int n);
Report check_lexicographic_unimodality_sweep(int n_max);

}  // namespace seb
