#include "seb/permutations.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "seb/core_numbers.hpp"

namespace seb {

namespace {

std::string idx3(int n, int k, int j) {
    std::ostringstream os;
    os << "(n,k,j)=(" << n << "," << k << "," << j << ")";
    return os.str();
}

std::uint32_t set_to_mask(const std::vector<int>& set, int n) {
    std::uint32_t mask = 0;
    for (int v : set) {
        if (v < 1 || v > n) throw std::invalid_argument("negative set element out of 1..n");
        mask |= 1u << (v - 1);
    }
    return mask;
}

std::string seq_str(std::span<const int> seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s + ")";
}

void validate_abs_permutation(const std::vector<int>& entries, bool allow_negative,
                              const char* who) {
    const int n = static_cast<int>(entries.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : entries) {
        int a = std::abs(v);
        if (v == 0 || a > n || seen[a])
            throw std::invalid_argument(std::string(who) + ": not a permutation of 1..n");
        if (!allow_negative && v < 0)
            throw std::invalid_argument(std::string(who) + ": negative entry not allowed");
        seen[a] = true;
    }
}

}  // namespace

int descents(std::span<const int> seq) {
    int d = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i - 1] > seq[i]) ++d;
    return d;
}

SignedPermutation::SignedPermutation(std::vector<int> entries) {
    validate_abs_permutation(entries, true, "SignedPermutation");
    seq_.reserve(entries.size() + 1);
    seq_.push_back(0);
    seq_.insert(seq_.end(), entries.begin(), entries.end());
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return SignedPermutation(std::move(e));
}

std::string SignedPermutation::str() const { return seq_str(seq_); }

TypeAPermutation::TypeAPermutation(std::vector<int> entries) {
    validate_abs_permutation(entries, false, "TypeAPermutation");
    seq_ = std::move(entries);
}

TypeAPermutation TypeAPermutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return TypeAPermutation(std::move(e));
}

std::string TypeAPermutation::str() const { return seq_str(seq_); }

DescentStats stats(std::span<const int> full_seq) {
    DescentStats st;
    st.des = descents(full_seq);
    for (std::size_t i = 1; i < full_seq.size(); ++i)
        if (full_seq[i] < 0) st.negative_set.push_back(-full_seq[i]);
    std::sort(st.negative_set.begin(), st.negative_set.end());
    st.neg = static_cast<int>(st.negative_set.size());
    return st;
}

DescentStats stats(const SignedPermutation& sigma) {
    return stats(std::span<const int>(sigma.sequence()));
}

std::vector<std::vector<BigInt>> oracle_big_b_table(int n, int cap) {
    std::vector<std::vector<long long>> counts(n + 1, std::vector<long long>(n + 1, 0));
    for_each_signed_permutation(
        n,
        [&](std::span<const int> seq) {
            int d = descents(seq), m = 0;
            for (std::size_t i = 1; i < seq.size(); ++i)
                if (seq[i] < 0) ++m;
            ++counts[d][m];
        },
        cap);
    std::vector<std::vector<BigInt>> out(n + 1, std::vector<BigInt>(n + 1));
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j) out[k][j] = counts[k][j];
    return out;
}

BigInt oracle_big_b(int n, int k, int j, int cap) {
    if (k < 0 || k > n || j < 0 || j > n) return 0;
    return oracle_big_b_table(n, cap)[k][j];
}

std::vector<std::vector<BigInt>> oracle_b_set_table(int n, int cap) {
    if (n > 31) throw std::invalid_argument("oracle_b_set_table: n too large for bitmask");
    std::vector<std::vector<long long>> counts(n + 1,
                                               std::vector<long long>(std::size_t(1) << n, 0));
    for_each_signed_permutation(
        n,
        [&](std::span<const int> seq) {
            int d = descents(seq);
            std::uint32_t mask = 0;
            for (std::size_t i = 1; i < seq.size(); ++i)
                if (seq[i] < 0) mask |= 1u << (-seq[i] - 1);
            ++counts[d][mask];
        },
        cap);
    std::vector<std::vector<BigInt>> out(n + 1,
                                         std::vector<BigInt>(std::size_t(1) << n));
    for (int k = 0; k <= n; ++k)
        for (std::uint32_t m = 0; m < (1u << n); ++m) out[k][m] = counts[k][m];
    return out;
}

BigInt oracle_b_set(int n, int k, const std::vector<int>& negative_set, int cap) {
    if (k < 0 || k > n) return 0;
    const std::uint32_t want = set_to_mask(negative_set, n);
    long long count = 0;
    for_each_signed_permutation(
        n,
        [&](std::span<const int> seq) {
            if (descents(seq) != k) return;
            std::uint32_t mask = 0;
            for (std::size_t i = 1; i < seq.size(); ++i)
                if (seq[i] < 0) mask |= 1u << (-seq[i] - 1);
            if (mask == want) ++count;
        },
        cap);
    return count;
}

BigInt oracle_a_first(int n, int k, int j, int cap) {
    if (n < 1 || j < 1 || j > n) throw std::invalid_argument("oracle_a_first: need 1 <= j <= n");
    long long count = 0;
    for_each_type_a_permutation(
        n,
        [&](std::span<const int> seq) {
            if (seq[0] == j && descents(seq) == k) ++count;
        },
        cap);
    return count;
}

int big_descent_count(std::span<const int> seq) {
    int d = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i - 1] - seq[i] >= 2) ++d;
    return d;
}

BigInt oracle_big_descents(int n, int k, int cap) {
    if (k < 1) throw std::invalid_argument("oracle_big_descents: need k >= 1");
    long long count = 0;
    for_each_type_a_permutation(
        n,
        [&](std::span<const int> seq) {
            if (big_descent_count(seq) == k - 1) ++count;
        },
        cap);
    return count;
}

const char* lambda_case_name(LambdaCase c) {
    switch (c) {
        case LambdaCase::positive_end_or_descent: return "positive, end or descent";
        case LambdaCase::positive_ascent: return "positive, ascent";
        case LambdaCase::negative_descent: return "negative, descent";
        case LambdaCase::negative_end_or_ascent: return "negative, end or ascent";
    }
    return "?";
}

std::pair<SignedPermutation, LambdaCase> lambda_delete(const SignedPermutation& sigma) {
    const int n = sigma.n();
    if (n < 1) throw std::invalid_argument("lambda_delete: empty permutation");
    const auto& seq = sigma.sequence();
    int i = 1;
    while (std::abs(seq[i]) != n) ++i;

    LambdaCase tag;
    if (seq[i] == n)
        tag = (i == n || seq[i - 1] > seq[i + 1]) ? LambdaCase::positive_end_or_descent
                                                  : LambdaCase::positive_ascent;
    else
        tag = (i < n && seq[i - 1] > seq[i + 1]) ? LambdaCase::negative_descent
                                                 : LambdaCase::negative_end_or_ascent;

    std::vector<int> shorter;
    shorter.reserve(n - 1);
    for (int t = 1; t <= n; ++t)
        if (t != i) shorter.push_back(seq[t]);
    return {SignedPermutation(std::move(shorter)), tag};
}

SignedPermutation lambda_insert(const SignedPermutation& tau, int sign, int position) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("lambda_insert: sign must be +-1");
    const int n = tau.n() + 1;
    if (position < 1 || position > n)
        throw std::invalid_argument("lambda_insert: position out of 1..n");
    std::vector<int> entries;
    entries.reserve(n);
    for (int t = 1; t < position; ++t) entries.push_back(tau.entry(t));
    entries.push_back(sign * n);
    for (int t = position; t <= n - 1; ++t) entries.push_back(tau.entry(t));
    return SignedPermutation(std::move(entries));
}

Report check_oracle_big_b(int n_max, int cap) {
    Report rep("oracle-vs-recurrence");
    BigBTable table(n_max);
    for (int n = 0; n <= n_max; ++n) {
        auto counted = oracle_big_b_table(n, cap);
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j)
                rep.check_eq(table.at(n, k, j), counted[k][j],
                             "B(n,k,j) = #{des=k, neg=j}", idx3(n, k, j));
    }
    return rep;
}

Report check_oracle_sets(int n_max, int cap) {
    Report rep("oracle-negative-sets");
    EulerianATable ea(n_max);
    LittleBTable little(n_max);
    for (int n = 0; n <= n_max; ++n) {
        auto counts = oracle_b_set_table(n, cap);
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        for (int k = 0; k <= n; ++k) {
            for (std::uint32_t mask = 0; mask <= full; ++mask) {
                int j = std::popcount(mask);
                rep.check_eq(little.at(n, k, j), counts[k][mask],
                             "b(n,k,U) depends only on |U| and equals b(n,k,|U|)",
                             "(n,k,U)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                 std::to_string(mask) + ")");
            }
            // boundary values in set form
            rep.check_eq(ea.at(n, k), counts[k][0], "b(n,k,{}) = A(n,k)",
                         idx3(n, k, 0));
            rep.check_eq(ea.at(n, n - k), counts[k][full], "b(n,k,{1..n}) = A(n,n-k)",
                         idx3(n, k, n));
        }
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            bool empty = (mask == 0), all = (mask == full);
            rep.check_eq(BigInt(empty ? 1 : 0), counts[0][mask], "b(n,0,U) = [U empty]",
                         "(n,U)=(" + std::to_string(n) + "," + std::to_string(mask) + ")");
            rep.check_eq(BigInt(all ? 1 : 0), counts[n][mask], "b(n,n,U) = [U full]",
                         "(n,U)=(" + std::to_string(n) + "," + std::to_string(mask) + ")");
        }
    }
    return rep;
}

Report check_oracle_type_a(int n_max, int cap) {
    Report rep("oracle-type-a");
    LittleBTable little(n_max);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::vector<long long>> counts(n + 2, std::vector<long long>(n + 2, 0));
        for_each_type_a_permutation(
            n + 1, [&](std::span<const int> seq) { ++counts[descents(seq)][seq[0]]; }, cap);
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j)
                rep.check_eq(little.at(n, k, j), BigInt(counts[k][j + 1]),
                             "b(n,k,j) = #{tau in A(n+1): des=k, tau_1=j+1}", idx3(n, k, j));
    }
    return rep;
}

Report check_big_descents(int n_max, int cap) {
    Report rep("oracle-big-descents");
    for (int n = 2; n <= n_max; ++n) {
        LittleBTable little(n);
        std::vector<long long> counts(n + 1, 0);
        for_each_type_a_permutation(
            n,
            [&](std::span<const int> seq) {
                int b = big_descent_count(seq);
                if (b <= n) ++counts[b];
            },
            cap);
        for (int k = 1; k <= n; ++k)
            rep.check_eq(little.at(n, k, 1), BigInt(counts[k - 1]),
                         "b(n,k,1) = #{tau in A(n): k-1 big descents}",
                         "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return rep;
}

Report check_enumeration_counts(int n_max, int cap) {
    Report rep("enumeration-counts");
    for (int n = 0; n <= n_max; ++n) {
        long long total = 0;
        std::set<std::vector<int>> distinct;
        bool track = n <= 5;
        for_each_signed_permutation(
            n,
            [&](std::span<const int> seq) {
                ++total;
                if (track) distinct.emplace(seq.begin(), seq.end());
            },
            cap);
        BigInt expected = pow_big(2, n) * factorial(n);
        rep.check_eq(expected, BigInt(total), "enumeration yields 2^n n! elements",
                     "n=" + std::to_string(n));
        if (track)
            rep.check_eq(expected, BigInt(distinct.size()), "enumeration yields distinct elements",
                         "n=" + std::to_string(n));
    }
    return rep;
}

Report check_lambda_fibers(int n_max, int cap) {
    Report rep("lambda-fibers");
    for (int n = 1; n <= n_max; ++n) {
        for_each_signed_permutation(
            n - 1,
            [&](std::span<const int> seq) {
                SignedPermutation tau(std::vector<int>(seq.begin() + 1, seq.end()));
                DescentStats ts = stats(tau);
                std::map<std::pair<int, int>, int> landed;
                for (int sign : {+1, -1}) {
                    for (int pos = 1; pos <= n; ++pos) {
                        SignedPermutation sigma = lambda_insert(tau, sign, pos);
                        DescentStats ss = stats(sigma);
                        ++landed[{ss.des, ss.neg}];

                        auto [back, tag] = lambda_delete(sigma);
                        rep.check(back == tau, "delete undoes insert",
                                  sigma.str() + " at n=" + std::to_string(n));
                        int dk = ss.des - ts.des, dj = ss.neg - ts.neg;
                        std::pair<int, int> want;
                        switch (tag) {
                            case LambdaCase::positive_end_or_descent: want = {0, 0}; break;
                            case LambdaCase::positive_ascent: want = {1, 0}; break;
                            case LambdaCase::negative_descent: want = {0, 1}; break;
                            case LambdaCase::negative_end_or_ascent: want = {1, 1}; break;
                        }
                        rep.check(std::pair(dk, dj) == want, "case tag matches statistics shift",
                                  sigma.str() + " tag=" + lambda_case_name(tag));
                    }
                }
                // multiplicities of the four target cells
                auto count_at = [&](int k, int j) {
                    auto it = landed.find({k, j});
                    return it == landed.end() ? 0 : it->second;
                };
                int d = ts.des, m = ts.neg;
                rep.check_eq(d + 1, count_at(d, m), "inserting +n keeps (k,j) in k+1 ways",
                             tau.str());
                rep.check_eq(n - (d + 1), count_at(d + 1, m),
                             "inserting +n into an ascent raises k in n-k ways", tau.str());
                rep.check_eq(d, count_at(d, m + 1),
                             "inserting -n into a descent raises j in k ways", tau.str());
                rep.check_eq(n - d, count_at(d + 1, m + 1),
                             "inserting -n at end/ascent raises both in n-k+1 ways", tau.str());
                int total = 0;
                for (auto& [cell, c] : landed) total += c;
                rep.check_eq(2 * n, total, "every insertion lands in one of four cells",
                             tau.str());
            },
            cap);
    }
    return rep;
}

}  // namespace seb
