#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seb/bigint.hpp"
#include "seb/report.hpp"

namespace seb {

// Enumeration caps: 2^n n! and n! growth. Overridable per call (the CLI wires
// SEB_MAX_ENUM through), but the library refuses silently huge sweeps.
inline constexpr int kSignedEnumCap = 8;
inline constexpr int kTypeAEnumCap = 9;

/// Number of positions i >= 1 with seq[i-1] > seq[i].
int descents(std::span<const int> seq);

/// A type B permutation stored as (0, s_1, ..., s_n); the other half of the
/// odd permutation on {-n..n} is implicit.
class SignedPermutation {
public:
    /// entries = (s_1, ..., s_n); validates that |entries| is a permutation
    /// of {1..n}.
    explicit SignedPermutation(std::vector<int> entries);

    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(seq_.size()) - 1; }
    /// s_i for 0 <= i <= n (s_0 = 0).
    int entry(int i) const { return seq_.at(i); }
    /// The full sequence (0, s_1, ..., s_n).
    const std::vector<int>& sequence() const { return seq_; }

    bool operator==(const SignedPermutation&) const = default;

    std::string str() const;

private:
    std::vector<int> seq_;
};

/// A permutation of {1..n} as the sequence (t_1, ..., t_n). Descents are
/// counted over that sequence alone: no prepended 0, unlike type B.
class TypeAPermutation {
public:
    explicit TypeAPermutation(std::vector<int> entries);

    static TypeAPermutation identity(int n);

    int n() const { return static_cast<int>(seq_.size()); }
    int entry(int i) const { return seq_.at(i - 1); }  // 1-based
    const std::vector<int>& sequence() const { return seq_; }

    int descent_count() const { return descents(seq_); }

    bool operator==(const TypeAPermutation&) const = default;

    std::string str() const;

private:
    std::vector<int> seq_;
};

struct DescentStats {
    int des = 0;
    int neg = 0;
    std::vector<int> negative_set;  // ascending absolute values
};

DescentStats stats(const SignedPermutation& sigma);
DescentStats stats(std::span<const int> full_seq);  // (0, s_1, ..., s_n)

/// Calls fn(span) once per element of the hyperoctahedral group on n letters,
/// with span = (0, s_1, ..., s_n). Order: unsigned permutations
/// lexicographically, then sign masks counting up in binary (bit i-1 set
/// means position i is negated). The span is reused between calls.
template <typename Fn>
void for_each_signed_permutation(int n, Fn&& fn, int cap = kSignedEnumCap) {
    if (n < 0) throw std::invalid_argument("for_each_signed_permutation: n < 0");
    if (n > cap)
        throw std::invalid_argument("for_each_signed_permutation: n = " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> seq(n + 1, 0);
    do {
        const std::uint32_t masks = 1u << n;
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            for (int i = 1; i <= n; ++i)
                seq[i] = (mask >> (i - 1)) & 1u ? -perm[i - 1] : perm[i - 1];
            fn(std::span<const int>(seq));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Calls fn(span) once per permutation of {1..n}, lexicographic order,
/// span = (t_1, ..., t_n).
template <typename Fn>
void for_each_type_a_permutation(int n, Fn&& fn, int cap = kTypeAEnumCap) {
    if (n < 0) throw std::invalid_argument("for_each_type_a_permutation: n < 0");
    if (n > cap)
        throw std::invalid_argument("for_each_type_a_permutation: n = " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        fn(std::span<const int>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// ---- brute-force oracles ----

/// counts[k][j] = #{sigma : des = k, neg = j} by exhaustive enumeration.
std::vector<std::vector<BigInt>> oracle_big_b_table(int n, int cap = kSignedEnumCap);
BigInt oracle_big_b(int n, int k, int j, int cap = kSignedEnumCap);

/// counts[k][mask] with mask encoding the negative set (bit i-1 <=> i).
std::vector<std::vector<BigInt>> oracle_b_set_table(int n, int cap = kSignedEnumCap);
BigInt oracle_b_set(int n, int k, const std::vector<int>& negative_set,
                    int cap = kSignedEnumCap);

/// #{tau in A_n : des = k, tau_1 = j}.
BigInt oracle_a_first(int n, int k, int j, int cap = kTypeAEnumCap);

/// Descents with drop >= 2 in a type A permutation.
int big_descent_count(std::span<const int> seq);

/// #{tau in A_n : exactly k-1 big descents}.
BigInt oracle_big_descents(int n, int k, int cap = kTypeAEnumCap);

// ---- deletion / insertion machinery behind the four-term recurrence ----

enum class LambdaCase {
    positive_end_or_descent,  // +n removed from the end or from a descent: (k,j) kept
    positive_ascent,          // +n removed from an ascent: k drops by 1
    negative_descent,         // -n removed from a descent: j drops by 1
    negative_end_or_ascent,   // -n removed from the end or an ascent: both drop
};

const char* lambda_case_name(LambdaCase c);

/// Removes the entry of maximal absolute value and classifies the local
/// context it was removed from.
std::pair<SignedPermutation, LambdaCase> lambda_delete(const SignedPermutation& sigma);

/// Inserts sign * (n+1) into an n-element permutation at position 1..n+1.
SignedPermutation lambda_insert(const SignedPermutation& tau, int sign, int position);

// ---- verification sweeps ----

Report check_oracle_big_b(int n_max, int cap = kSignedEnumCap);
Report check_oracle_sets(int n_max, int cap = kSignedEnumCap);
Report check_oracle_type_a(int n_max, int cap = kTypeAEnumCap);
Report check_big_descents(int n_max, int cap = kTypeAEnumCap);
Report check_enumeration_counts(int n_max, int cap = kSignedEnumCap);
Report check_lambda_fibers(int n_max, int cap = kSignedEnumCap);

}  // namespace seb
