#include "seb/core_numbers.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace seb {

namespace {

const BigInt kZero = 0;

std::string idx2(int n, int k) {
    std::ostringstream os;
    os << "(n,k)=(" << n << "," << k << ")";
    return os.str();
}

std::string idx3(int n, int k, int j) {
    std::ostringstream os;
    os << "(n,k,j)=(" << n << "," << k << "," << j << ")";
    return os.str();
}

}  // namespace

BinomialTable::BinomialTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("BinomialTable: n_max < 0");
    rows_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rows_[n].assign(n + 1, 0);
        rows_[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            rows_[n][k] = rows_[n - 1][k - 1] + (k <= n - 1 ? rows_[n - 1][k] : kZero);
    }
}

const BigInt& BinomialTable::at(int n, int k) const {
    if (n < 0 || n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("BinomialTable::at: n out of range");
    if (k < 0 || k > n) return kZero;
    return rows_[n][k];
}

BigInt binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n < 0");
    if (k < 0 || k > n) return 0;
    return BinomialTable(n).at(n, k);
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n < 0");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

EulerianATable::EulerianATable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("EulerianATable: n_max < 0");
    rows_.resize(n_max + 1);
    rows_[0] = {1};
    for (int n = 1; n <= n_max; ++n) {
        rows_[n].assign(n + 1, 0);
        for (int k = 0; k <= n; ++k) {
            const BigInt& lo = at(n - 1, k - 1);
            const BigInt& hi = at(n - 1, k);
            rows_[n][k] = (n - k) * lo + (k + 1) * hi;
        }
    }
}

const BigInt& EulerianATable::at(int n, int k) const {
    if (n < 0 || n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("EulerianATable::at: n out of range");
    if (k < 0 || k > n) return kZero;
    return rows_[n][k];
}

EulerianBTable::EulerianBTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("EulerianBTable: n_max < 0");
    rows_.resize(n_max + 1);
    rows_[0] = {1};
    for (int n = 1; n <= n_max; ++n) {
        rows_[n].assign(n + 1, 0);
        for (int k = 0; k <= n; ++k)
            rows_[n][k] = (2 * n - 2 * k + 1) * at(n - 1, k - 1) + (2 * k + 1) * at(n - 1, k);
    }
}

const BigInt& EulerianBTable::at(int n, int k) const {
    if (n < 0 || n >= static_cast<int>(rows_.size()))
        throw std::out_of_range("EulerianBTable::at: n out of range");
    if (k < 0 || k > n) return kZero;
    return rows_[n][k];
}

BigBTable::BigBTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("BigBTable: n_max < 0");
    layers_.resize(n_max + 1);
    layers_[0] = {{BigInt(1)}};
    for (int n = 1; n <= n_max; ++n) {
        layers_[n].assign(n + 1, std::vector<BigInt>(n + 1, 0));
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j)
                layers_[n][k][j] = (k + 1) * at(n - 1, k, j) + (n - k) * at(n - 1, k - 1, j) +
                                   k * at(n - 1, k, j - 1) +
                                   (n - k + 1) * at(n - 1, k - 1, j - 1);
    }
}

const BigInt& BigBTable::at(int n, int k, int j) const {
    if (n < 0 || n >= static_cast<int>(layers_.size()))
        throw std::out_of_range("BigBTable::at: n out of range");
    if (k < 0 || k > n || j < 0 || j > n) return kZero;
    return layers_[n][k][j];
}

LittleBTable::LittleBTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("LittleBTable: n_max < 0");
    layers_.resize(n_max + 1);
    layers_[0] = {{BigInt(1)}};
    for (int n = 1; n <= n_max; ++n) {
        layers_[n].assign(n + 1, std::vector<BigInt>(n + 1, 0));
        for (int k = 0; k <= n; ++k) {
            for (int j = 0; j < n; ++j)
                layers_[n][k][j] = (k + 1) * at(n - 1, k, j) + (n - k) * at(n - 1, k - 1, j);
            layers_[n][k][n] =
                k * at(n - 1, k, n - 1) + (n - k + 1) * at(n - 1, k - 1, n - 1);
        }
    }
}

const BigInt& LittleBTable::at(int n, int k, int j) const {
    if (n < 0 || n >= static_cast<int>(layers_.size()))
        throw std::out_of_range("LittleBTable::at: n out of range");
    if (k < 0 || k > n || j < 0 || j > n) return kZero;
    return layers_[n][k][j];
}

BigInt eulerian_a(int n, int k) {
    if (n < 0) throw std::invalid_argument("eulerian_a: n < 0");
    if (k < 0 || k > n) return 0;
    return EulerianATable(n).at(n, k);
}

BigInt eulerian_a_formula(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("eulerian_a_formula: need 0 <= k <= n");
    BinomialTable binom(n + 1);
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
        BigInt term = binom.at(n + 1, k - i) * pow_big(i + 1, n);
        sum += ((k - i) % 2 == 0) ? term : -term;
    }
    return to_count(sum, "eulerian_a_formula");
}

BigInt eulerian_b(int n, int k) {
    if (n < 0) throw std::invalid_argument("eulerian_b: n < 0");
    if (k < 0 || k > n) return 0;
    return EulerianBTable(n).at(n, k);
}

BigInt eulerian_b_formula(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("eulerian_b_formula: need 0 <= k <= n");
    BinomialTable binom(n + 1);
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
        BigInt term = binom.at(n + 1, k - i) * pow_big(2 * i + 1, n);
        sum += ((k - i) % 2 == 0) ? term : -term;
    }
    return to_count(sum, "eulerian_b_formula");
}

BigInt big_b(int n, int k, int j) {
    if (n < 0) throw std::invalid_argument("big_b: n < 0");
    if (k < 0 || k > n || j < 0 || j > n) return 0;
    return BigBTable(n).at(n, k, j);
}

BigInt big_b_formula(int n, int k, int j) {
    if (n < 0 || k < 0 || k > n || j < 0 || j > n)
        throw std::invalid_argument("big_b_formula: need 0 <= k,j <= n");
    return binomial(n, j) * little_b_formula(n, k, j);
}

BigInt little_b(int n, int k, int j) {
    if (n < 0) throw std::invalid_argument("little_b: n < 0");
    if (k < 0 || k > n || j < 0 || j > n) return 0;
    return LittleBTable(n).at(n, k, j);
}

BigInt little_b_formula(int n, int k, int j) {
    if (n < 0 || k < 0 || k > n || j < 0 || j > n)
        throw std::invalid_argument("little_b_formula: need 0 <= k,j <= n");
    BinomialTable binom(n + 1);
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
        // 0^0 = 1 here
        BigInt term = binom.at(n + 1, k - i) * pow_big(i, j) * pow_big(i + 1, n - j);
        sum += ((k - i) % 2 == 0) ? term : -term;
    }
    return to_count(sum, "little_b_formula");
}

BigInt divisibility_witness(int n, int k, int j) {
    if (n < 0 || k < 0 || k > n || j < 0 || j > n)
        throw std::invalid_argument("divisibility_witness: need 0 <= k,j <= n");
    BigInt numer = big_b(n, k, j);
    BigInt denom = binomial(n, j);
    BigInt q = numer / denom;
    if (q * denom != numer)
        throw std::logic_error("divisibility_witness: C(n,j) does not divide B(n,k,j) at " +
                               idx3(n, k, j));
    return q;
}

std::pair<BigInt, BigInt> parity_sums(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("parity_sums: need 0 <= k <= n");
    BigBTable table(n);
    BigInt even = 0, odd = 0;
    for (int j = 0; j <= n; ++j) (j % 2 == 0 ? even : odd) += table.at(n, k, j);
    BigInt sign = (k % 2 == 0) ? 1 : -1;
    BigInt two_even = eulerian_b(n, k) + sign * binomial(n, k);
    BigInt two_odd = eulerian_b(n, k) - sign * binomial(n, k);
    if (2 * even != two_even || 2 * odd != two_odd)
        throw std::logic_error("parity_sums: identity violated at " + idx2(n, k));
    return {even, odd};
}

Report check_closed_forms(int n_max) {
    Report rep("closed-forms");
    BigBTable big(n_max);
    LittleBTable little(n_max);
    EulerianATable ea(n_max + 1);
    EulerianBTable eb(n_max);
    BinomialTable binom(n_max + 1);

    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            rep.check_eq(ea.at(n, k), eulerian_a_formula(n, k), "A(n,k) recurrence = formula",
                         idx2(n, k));
            rep.check_eq(eb.at(n, k), eulerian_b_formula(n, k), "B(n,k) recurrence = formula",
                         idx2(n, k));
            for (int j = 0; j <= n; ++j) {
                rep.check_eq(big.at(n, k, j), binom.at(n, j) * little_b_formula(n, k, j),
                             "B(n,k,j) recurrence = formula", idx3(n, k, j));
                rep.check_eq(little.at(n, k, j), little_b_formula(n, k, j),
                             "b(n,k,j) recurrence = formula", idx3(n, k, j));
            }
        }

        if (n >= 1) {
            for (int k = 0; k <= n; ++k) {
                for (int j = 0; j <= n; ++j) {
                    // the two one-step recurrences on their stated ranges
                    if (j < n)
                        rep.check_eq(little.at(n, k, j),
                                     (k + 1) * little.at(n - 1, k, j) +
                                         (n - k) * little.at(n - 1, k - 1, j),
                                     "b(n,k,j) j-preserving recurrence", idx3(n, k, j));
                    if (j > 0)
                        rep.check_eq(little.at(n, k, j),
                                     k * little.at(n - 1, k, j - 1) +
                                         (n - k + 1) * little.at(n - 1, k - 1, j - 1),
                                     "b(n,k,j) j-shifting recurrence", idx3(n, k, j));
                    // full-row sum recurrence
                    BigInt sum = 0;
                    for (int i = 0; i <= j - 1; ++i) sum += little.at(n - 1, k - 1, i);
                    for (int i = j; i <= n - 1; ++i) sum += little.at(n - 1, k, i);
                    rep.check_eq(little.at(n, k, j), sum, "b(n,k,j) row-sum recurrence",
                                 idx3(n, k, j));
                }
            }
        }

        // boundary rows and columns
        for (int j = 0; j <= n; ++j) {
            rep.check_eq(BigInt(j == 0 ? 1 : 0), big.at(n, 0, j), "B(n,0,j) = [j=0]",
                         idx3(n, 0, j));
            rep.check_eq(BigInt(j == n ? 1 : 0), big.at(n, n, j), "B(n,n,j) = [j=n]",
                         idx3(n, n, j));
            rep.check_eq(BigInt(j == 0 ? 1 : 0), little.at(n, 0, j), "b(n,0,j) = [j=0]",
                         idx3(n, 0, j));
            rep.check_eq(BigInt(j == n ? 1 : 0), little.at(n, n, j), "b(n,n,j) = [j=n]",
                         idx3(n, n, j));
        }
        for (int k = 0; k <= n; ++k) {
            rep.check_eq(ea.at(n, k), big.at(n, k, 0), "B(n,k,0) = A(n,k)", idx3(n, k, 0));
            rep.check_eq(ea.at(n, n - k), big.at(n, k, n), "B(n,k,n) = A(n,n-k)",
                         idx3(n, k, n));
            rep.check_eq(ea.at(n, k), little.at(n, k, 0), "b(n,k,0) = A(n,k)", idx3(n, k, 0));
            rep.check_eq(ea.at(n, n - k), little.at(n, k, n), "b(n,k,n) = A(n,n-k)",
                         idx3(n, k, n));
        }

        // B(n,1,0) = 2^n - n - 1 and B(n,1,j) = C(n,j) 2^(n-j) for j >= 1
        if (n >= 1) {
            rep.check_eq(pow_big(2, n) - n - 1, big.at(n, 1, 0), "B(n,1,0) = 2^n - n - 1",
                         idx3(n, 1, 0));
            for (int j = 1; j <= n; ++j)
                rep.check_eq(binom.at(n, j) * pow_big(2, n - j), big.at(n, 1, j),
                             "B(n,1,j) = C(n,j) 2^(n-j)", idx3(n, 1, j));
        }
    }
    return rep;
}

Report check_symmetries(int n_max) {
    Report rep("symmetries");
    BigBTable big(n_max);
    LittleBTable little(n_max);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                rep.check_eq(big.at(n, k, j), big.at(n, n - k, n - j),
                             "B(n,k,j) = B(n,n-k,n-j)", idx3(n, k, j));
                rep.check_eq(little.at(n, k, j), little.at(n, n - k, n - j),
                             "b(n,k,j) = b(n,n-k,n-j)", idx3(n, k, j));
            }
        if (n >= 1)
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= n; ++j)
                    rep.check_eq(little.at(n, k, j - 1) - little.at(n, k, j),
                                 little.at(n - 1, k, j - 1) - little.at(n - 1, k - 1, j - 1),
                                 "b first-difference identity", idx3(n, k, j));
    }
    return rep;
}

Report check_sum_formulas(int n_max) {
    Report rep("sum-formulas");
    BigBTable big(n_max);
    LittleBTable little(n_max);
    EulerianATable ea(n_max + 1);
    EulerianBTable eb(n_max);
    BinomialTable binom(n_max);
    for (int n = 0; n <= n_max; ++n) {
        BigInt nfact = factorial(n);
        for (int k = 0; k <= n; ++k) {
            BigInt row_big = 0, row_little = 0;
            for (int j = 0; j <= n; ++j) {
                row_big += big.at(n, k, j);
                row_little += little.at(n, k, j);
            }
            rep.check_eq(eb.at(n, k), row_big, "sum_j B(n,k,j) = B(n,k)", idx2(n, k));
            rep.check_eq(ea.at(n + 1, k), row_little, "sum_j b(n,k,j) = A(n+1,k)", idx2(n, k));
        }
        for (int j = 0; j <= n; ++j) {
            BigInt col_big = 0, col_little = 0;
            for (int k = 0; k <= n; ++k) {
                col_big += big.at(n, k, j);
                col_little += little.at(n, k, j);
            }
            rep.check_eq(binom.at(n, j) * nfact, col_big, "sum_k B(n,k,j) = C(n,j) n!",
                         idx2(n, j));
            rep.check_eq(nfact, col_little, "sum_k b(n,k,j) = n!", idx2(n, j));
        }
    }
    return rep;
}

Report check_parity_sums(int n_max) {
    Report rep("parity-sums");
    BigBTable big(n_max);
    EulerianBTable eb(n_max);
    BinomialTable binom(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            BigInt even = 0, odd = 0;
            for (int j = 0; j <= n; ++j) (j % 2 == 0 ? even : odd) += big.at(n, k, j);
            BigInt sign = (k % 2 == 0) ? 1 : -1;
            rep.check_eq(eb.at(n, k) + sign * binom.at(n, k), 2 * even,
                         "2 sum_{j even} B(n,k,j) = B(n,k) + (-1)^k C(n,k)", idx2(n, k));
            rep.check_eq(eb.at(n, k) - sign * binom.at(n, k), 2 * odd,
                         "2 sum_{j odd} B(n,k,j) = B(n,k) - (-1)^k C(n,k)", idx2(n, k));
        }
    return rep;
}

Report check_divisibility(int n_max) {
    Report rep("divisibility");
    BigBTable big(n_max);
    LittleBTable little(n_max);
    BinomialTable binom(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                const BigInt& numer = big.at(n, k, j);
                const BigInt& denom = binom.at(n, j);
                BigInt q = numer / denom;
                bool exact = (q * denom == numer);
                rep.check(exact, "C(n,j) | B(n,k,j)", idx3(n, k, j), "exact division",
                          "remainder " + (numer - q * denom).str());
                if (exact)
                    rep.check_eq(little.at(n, k, j), q, "B(n,k,j)/C(n,j) = b(n,k,j)",
                                 idx3(n, k, j));
            }
    return rep;
}

Report check_log_concavity(int n_max) {
    Report rep("log-concavity");
    BigBTable big(n_max);
    for (int n = 2; n <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 1; k < n; ++k) {
                BigInt lhs = big.at(n, k, j) * big.at(n, k, j) * k * (n - k);
                BigInt rhs =
                    big.at(n, k - 1, j) * big.at(n, k + 1, j) * (k + 1) * (n - k + 1);
                rep.check(lhs >= rhs, "B(n,k,j)^2 k(n-k) >= B(n,k-1,j)B(n,k+1,j)(k+1)(n-k+1)",
                          idx3(n, k, j), ">= " + rhs.str(), lhs.str());
            }
    return rep;
}

Report check_fractional_recurrences(int n_max) {
    Report rep("fractional-recurrences");
    BigBTable big(n_max);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                if (j < n)
                    rep.check_eq(big.at(n, k, j) * (n - j),
                                 BigInt(n) * ((k + 1) * big.at(n - 1, k, j) +
                                              (n - k) * big.at(n - 1, k - 1, j)),
                                 "(n-j) B(n,k,j) = n[(k+1)B(n-1,k,j) + (n-k)B(n-1,k-1,j)]",
                                 idx3(n, k, j));
                if (j > 0)
                    rep.check_eq(
                        big.at(n, k, j) * j,
                        BigInt(n) * (k * big.at(n - 1, k, j - 1) +
                                     (n - k + 1) * big.at(n - 1, k - 1, j - 1)),
                        "j B(n,k,j) = n[k B(n-1,k,j-1) + (n-k+1)B(n-1,k-1,j-1)]",
                        idx3(n, k, j));
            }
    return rep;
}

Report check_lexicographic_unimodality(int n) {
    Report rep("lex-unimodality");
    if (n < 1) throw std::invalid_argument("check_lexicographic_unimodality: n >= 1 required");
    LittleBTable little(n);

    // family (a): within-row steps b(n,k,j-1) >= b(n,k,j)
    for (int k = 0; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            bool in_range = (2 * k < n) || (2 * k == n && 2 * j > n);
            if (!in_range) continue;
            const BigInt& hi = little.at(n, k, j - 1);
            const BigInt& lo = little.at(n, k, j);
            rep.check(hi >= lo, "b(n,k,j-1) >= b(n,k,j)", idx3(n, k, j), ">= " + lo.str(),
                      hi.str());
            bool exceptional =
                (k == 0 && j >= 2) || (n % 2 == 1 && 2 * k == n - 1 && j == 1);
            if (!exceptional)
                rep.check(hi > lo, "b(n,k,j-1) > b(n,k,j) (strict part)", idx3(n, k, j),
                          "> " + lo.str(), hi.str());
        }

    // family (b): between-row steps b(n,k-1,j) <= b(n,k,j)
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j <= n; ++j) {
            bool in_range = (2 * k <= n) || (n % 2 == 1 && 2 * k == n + 1 && 2 * j >= n + 1);
            if (!in_range) continue;
            const BigInt& lo = little.at(n, k - 1, j);
            const BigInt& hi = little.at(n, k, j);
            rep.check(lo <= hi, "b(n,k-1,j) <= b(n,k,j)", idx3(n, k, j), "<= " + hi.str(),
                      lo.str());
            bool exceptional = (n % 2 == 0 && 2 * k == n && j == 0);
            if (!exceptional)
                rep.check(lo < hi, "b(n,k-1,j) < b(n,k,j) (strict part)", idx3(n, k, j),
                          "< " + hi.str(), lo.str());
        }

    // full unimodality along the linear order: rows k ascending, j descending
    std::vector<BigInt> seq;
    std::vector<std::pair<int, int>> cells;
    for (int k = 0; k <= n; ++k)
        for (int j = n; j >= 0; --j) {
            seq.push_back(little.at(n, k, j));
            cells.emplace_back(k, j);
        }
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i + 1] >= seq[i]) ++i;
    std::size_t peak = i;
    while (i + 1 < seq.size() && seq[i + 1] <= seq[i]) ++i;
    rep.check(i + 1 == seq.size(), "b(n,.,.) unimodal under the row-major order", "n=" +
              std::to_string(n), "single peak",
              i + 1 < seq.size() ? "rise after position " + std::to_string(i) : "");

    // locate the argmax and report both coordinate readings for odd n
    const BigInt& maxval = seq[peak];
    std::string argmax;
    for (std::size_t t = 0; t < seq.size(); ++t)
        if (seq[t] == maxval)
            argmax += "(" + std::to_string(cells[t].first) + "," +
                      std::to_string(cells[t].second) + ")";
    rep.note("n=" + std::to_string(n) + ": max value " + maxval.str() + " at cells " + argmax);
    if (n % 2 == 0) {
        rep.check_eq(maxval, little.at(n, n / 2, n / 2), "max attained at b(n,n/2,n/2)",
                     idx3(n, n / 2, n / 2));
    } else {
        int half = (n - 1) / 2;
        const BigInt& stated = little.at(n, half, n);  // = b(n,(n+1)/2,0)
        const BigInt& swapped = little.at(n, half, 0);  // = b(n,(n+1)/2,n)
        rep.note("n=" + std::to_string(n) + ": stated coordinates (" + std::to_string(half) +
                 "," + std::to_string(n) + ")/(" + std::to_string(half + 1) +
                 ",0) hold value " + stated.str() + "; swapped coordinates (" +
                 std::to_string(half) + ",0)/(" + std::to_string(half + 1) + "," +
                 std::to_string(n) + ") hold value " + swapped.str() +
                 (swapped == maxval ? " = the maximum" : " != the maximum"));
    }
    return rep;
}

Report check_lexicographic_unimodality_sweep(int n_max) {
    Report rep("lex-unimodality");
    for (int n = 1; n <= n_max; ++n) rep.merge(check_lexicographic_unimodality(n));
    return rep;
}

}  // namespace seb
