#include "seb/polynomial_families.hpp"

#include <string>

#include "seb/core_numbers.hpp"

namespace seb {

namespace {

using BivarRat = Poly<RatPoly>;  // outer variable u, inner variable y

std::string idx2(int n, int k) {
    return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
}
std::string idx3(int n, int k, int j) {
    return "(n,k,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(j) +
           ")";
}

IntPoly from_table_row(const std::vector<BigInt>& coeffs) { return IntPoly(coeffs); }

// x - x^2
const RatPoly& rat_x_minus_x2() {
    static const RatPoly p(std::vector<Rational>{0, 1, -1});
    return p;
}

}  // namespace

IntPoly eulerian_poly_a(int n) {
    EulerianATable t(n);
    std::vector<BigInt> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = t.at(n, k);
    return from_table_row(c);
}

IntPoly eulerian_poly_b(int n) {
    EulerianBTable t(n);
    std::vector<BigInt> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = t.at(n, k);
    return from_table_row(c);
}

std::vector<IntPoly> build_p_family(int n) {
    const IntPoly x = IntPoly::variable();
    const IntPoly x_minus_x2 = x - x * x;
    std::vector<IntPoly> prev = {IntPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<IntPoly> cur(m + 1);
        IntPoly pa = eulerian_poly_a(m);
        cur[0] = pa;
        cur[m] = x * pa;
        for (int j = 1; j < m; ++j) {
            IntPoly ones(std::vector<BigInt>{1, m - 1});  // 1 + (m-1)x
            cur[j] = ones * prev[j] + x_minus_x2 * prev[j].derivative() +
                     x.scaled(m) * prev[j - 1] + x_minus_x2 * prev[j - 1].derivative();
        }
        prev = std::move(cur);
    }
    return prev;
}

std::vector<IntPoly> build_q_family(int n) {
    std::vector<IntPoly> prev = {IntPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<IntPoly> cur(m + 1);
        cur[0] = IntPoly(1);
        cur[m] = IntPoly::monomial(1, m);
        for (int k = 1; k < m; ++k) {
            IntPoly keep(std::vector<BigInt>{k + 1, k});            // k+1 + k y
            IntPoly raise(std::vector<BigInt>{m - k, m - k + 1});   // m-k + (m-k+1) y
            cur[k] = keep * prev[k] + raise * prev[k - 1];
        }
        prev = std::move(cur);
    }
    return prev;
}

std::vector<IntPoly> build_little_p_family(int n) {
    const RatPoly x = RatPoly::variable();
    std::vector<RatPoly> prev = {RatPoly(1)};
    std::vector<IntPoly> out = {IntPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<RatPoly> cur(m + 1);
        RatPoly pa = to_rational(eulerian_poly_a(m));
        cur[0] = pa;
        cur[m] = x * pa;
        for (int j = 1; j < m; ++j) {
            Rational keep(m - j, m), shift(j, m);
            RatPoly ones(std::vector<Rational>{1, m - 1});
            cur[j] = (ones * prev[j] + rat_x_minus_x2() * prev[j].derivative()).scaled(keep) +
                     x.scaled(Rational(j)) * prev[j - 1] +
                     rat_x_minus_x2().scaled(shift) * prev[j - 1].derivative();
        }
        prev = std::move(cur);
        if (m == n) {
            out.clear();
            for (const auto& p : prev) out.push_back(to_integer(p));
        }
    }
    return out;
}

std::vector<IntPoly> build_little_p_family_sum(int n) {
    const IntPoly x = IntPoly::variable();
    std::vector<IntPoly> prev = {IntPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<IntPoly> cur(m + 1);
        // suffix[i] = sum of prev[i..m-1], prefix stays implicit via the loop
        IntPoly shifted;  // x * sum of prev[0..j-1]
        IntPoly tail;     // sum of prev[j..m-1]
        for (int i = 0; i < m; ++i) tail += prev[i];
        for (int j = 0; j <= m; ++j) {
            cur[j] = shifted + tail;
            if (j < m) {
                shifted += x * prev[j];
                tail -= prev[j];
            }
        }
        prev = std::move(cur);
    }
    return prev;
}

RatPoly binomial_poly(int shift, int n) {
    RatPoly p(1);
    const RatPoly x = RatPoly::variable();
    for (int t = 0; t < n; ++t) p *= x + RatPoly(Rational(shift - t));
    return p.scaled(Rational(1, factorial(n)));
}

Report worpitzky_q(int n) {
    Report rep("worpitzky-q");
    auto q = build_q_family(n);

    auto lift = [](const RatPoly& in_u, const IntPoly& in_y) {
        // product of a polynomial in u with a polynomial in y
        std::vector<RatPoly> outer(in_u.coeffs().size());
        RatPoly y_part = to_rational(in_y);
        for (std::size_t i = 0; i < in_u.coeffs().size(); ++i)
            outer[i] = y_part.scaled(in_u.coeffs()[i]);
        return BivarRat(std::move(outer));
    };

    BivarRat lhs1, lhs2;
    for (int k = 0; k <= n; ++k) {
        lhs1 += lift(binomial_poly(n - k, n), q[k]);
        lhs2 += lift(binomial_poly(k, n), q[k]);
    }

    // (u + 1 + u y)^n and (u + y + u y)^n
    const RatPoly one_y(std::vector<Rational>{1, 1});  // 1 + y
    BivarRat base1(std::vector<RatPoly>{RatPoly(1), one_y});
    BivarRat base2(std::vector<RatPoly>{RatPoly::variable(), one_y});
    BivarRat rhs1(1), rhs2(1);
    for (int t = 0; t < n; ++t) {
        rhs1 *= base1;
        rhs2 *= base2;
    }

    rep.check(lhs1 == rhs1, "sum_k C(u+n-k,n) Q(n,k) = (u+1+uy)^n", "n=" + std::to_string(n));
    rep.check(lhs2 == rhs2, "sum_k C(u+k,n) Q(n,k) = (u+y+uy)^n", "n=" + std::to_string(n));
    return rep;
}

Report worpitzky_little_b(int n, int j) {
    Report rep("worpitzky-little-b");
    if (j < 0 || j > n) throw std::invalid_argument("worpitzky_little_b: need 0 <= j <= n");
    LittleBTable little(n);
    RatPoly lhs;
    for (int k = 0; k <= n; ++k)
        lhs += binomial_poly(n - k, n).scaled(Rational(little.at(n, k, j)));
    const RatPoly x = RatPoly::variable();
    RatPoly rhs(1);
    for (int t = 0; t < j; ++t) rhs *= x;
    const RatPoly one_x(std::vector<Rational>{1, 1});
    for (int t = 0; t < n - j; ++t) rhs *= one_x;
    rep.check(lhs == rhs, "sum_k b(n,k,j) C(x+n-k,n) = x^j (1+x)^(n-j)",
              idx2(n, j));
    return rep;
}

Report check_worpitzky(int n_max) {
    Report rep("worpitzky");
    for (int n = 0; n <= n_max; ++n) {
        rep.merge(worpitzky_q(n));
        for (int j = 0; j <= n; ++j) rep.merge(worpitzky_little_b(n, j));
    }
    return rep;
}

Report check_poly_symmetries(int n_max) {
    Report rep("poly-symmetries");
    for (int n = 0; n <= n_max; ++n) {
        auto p = build_p_family(n);
        auto q = build_q_family(n);
        for (int j = 0; j <= n; ++j)
            rep.check(p[j] == p[n - j].reversed(n), "P(n,j) = x^n P(n,n-j)(1/x)", idx2(n, j));
        for (int k = 0; k <= n; ++k)
            rep.check(q[k] == q[n - k].reversed(n), "Q(n,k) = y^n Q(n,n-k)(1/y)", idx2(n, k));
    }
    return rep;
}

Report check_polynomial_families(int n_max) {
    Report rep("polynomial-families");
    BinomialTable binom(n_max);
    for (int n = 0; n <= n_max; ++n) {
        BigBTable big(n);
        LittleBTable little(n);
        auto p = build_p_family(n);
        auto q = build_q_family(n);
        auto lp = build_little_p_family(n);
        auto lp_sum = build_little_p_family_sum(n);

        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                rep.check_eq(big.at(n, k, j), p[j].coeff(k), "[x^k] P(n,j) = B(n,k,j)",
                             idx3(n, k, j));
                rep.check_eq(big.at(n, k, j), q[k].coeff(j), "[y^j] Q(n,k) = B(n,k,j)",
                             idx3(n, k, j));
                rep.check_eq(little.at(n, k, j), lp[j].coeff(k), "[x^k] p(n,j) = b(n,k,j)",
                             idx3(n, k, j));
            }

        for (int j = 0; j <= n; ++j) {
            rep.check(lp[j] == lp_sum[j], "derivative and row-sum recurrences agree",
                      idx2(n, j));
            rep.check(p[j] == lp[j].scaled(binom.at(n, j)), "P(n,j) = C(n,j) p(n,j)",
                      idx2(n, j));
            rep.check_eq(binom.at(n, j) * factorial(n), p[j].evaluate(BigInt(1)),
                         "P(n,j)(1) = C(n,j) n!", idx2(n, j));
            rep.check_eq(factorial(n), lp[j].evaluate(BigInt(1)), "p(n,j)(1) = n!",
                         idx2(n, j));
            if (n >= 1) {
                int want = (j == n) ? n : n - 1;
                rep.check_eq(want, lp[j].degree(), "deg p(n,j)", idx2(n, j));
            }
        }
        if (n >= 1)
            rep.check(lp[n] == IntPoly::variable() * lp[0], "p(n,n) = x p(n,0)",
                      "n=" + std::to_string(n));

        IntPoly sum;
        for (int j = 0; j <= n; ++j) sum += lp[j];
        rep.check(sum == eulerian_poly_a(n + 1), "sum_j p(n,j) = type A polynomial of n+1",
                  "n=" + std::to_string(n));
    }
    return rep;
}

}  // namespace seb
