#include "seb/series.hpp"

#include <sstream>
#include <stdexcept>

#include "seb/core_numbers.hpp"
#include "seb/polynomial_families.hpp"

namespace seb {

BivarPoly::BivarPoly(const Rational& constant) {
    if (constant != 0) c_[{0, 0}] = constant;
}

BivarPoly BivarPoly::monomial(const Rational& c, int xpow, int ypow) {
    if (xpow < 0 || ypow < 0) throw std::invalid_argument("BivarPoly::monomial: negative power");
    BivarPoly p;
    if (c != 0) p.c_[{xpow, ypow}] = c;
    return p;
}

BivarPoly BivarPoly::from_x_poly(const RatPoly& p) {
    BivarPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out.set(static_cast<int>(i), 0, p.coeffs()[i]);
    return out;
}

BivarPoly BivarPoly::from_x_poly(const IntPoly& p) { return from_x_poly(to_rational(p)); }

Rational BivarPoly::coeff(int xpow, int ypow) const {
    auto it = c_.find({xpow, ypow});
    return it == c_.end() ? Rational(0) : it->second;
}

int BivarPoly::x_degree() const {
    int d = -1;
    for (const auto& [p, v] : c_) d = std::max(d, p.first);
    return d;
}

int BivarPoly::y_degree() const {
    int d = -1;
    for (const auto& [p, v] : c_) d = std::max(d, p.second);
    return d;
}

void BivarPoly::set(int xpow, int ypow, const Rational& v) {
    if (v == 0)
        c_.erase({xpow, ypow});
    else
        c_[{xpow, ypow}] = v;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [p, v] : o.c_) {
        auto it = c_.find(p);
        if (it == c_.end()) {
            c_[p] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [p, v] : r.c_) v = -v;
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [pa, va] : a.c_)
        for (const auto& [pb, vb] : b.c_) {
            std::pair<int, int> key{pa.first + pb.first, pa.second + pb.second};
            auto it = r.c_.find(key);
            if (it == r.c_.end()) {
                Rational prod = va * vb;
                if (prod != 0) r.c_[key] = std::move(prod);
            } else {
                it->second += va * vb;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    return r;
}

BivarPoly BivarPoly::scaled(const Rational& s) const {
    BivarPoly r;
    if (s == 0) return r;
    for (const auto& [p, v] : c_) r.c_[p] = v * s;
    return r;
}

BivarPoly BivarPoly::dx() const {
    BivarPoly r;
    for (const auto& [p, v] : c_)
        if (p.first >= 1) r.c_[{p.first - 1, p.second}] = v * p.first;
    return r;
}

BivarPoly BivarPoly::reversed(int nx, int ny) const {
    if (x_degree() > nx || y_degree() > ny)
        throw std::invalid_argument("BivarPoly::reversed: degree exceeds bound");
    BivarPoly r;
    for (const auto& [p, v] : c_) r.c_[{nx - p.first, ny - p.second}] = v;
    return r;
}

RatPoly BivarPoly::evaluate_y(const Rational& y) const {
    std::vector<Rational> out(x_degree() + 1, Rational(0));
    for (const auto& [p, v] : c_) {
        Rational term = v;
        for (int t = 0; t < p.second; ++t) term *= y;
        out[p.first] += term;
    }
    return RatPoly(std::move(out));
}

std::string BivarPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, v] : c_) {
        if (!first) os << " + ";
        os << to_string(v);
        if (p.first) os << "*x" << (p.first > 1 ? "^" + std::to_string(p.first) : "");
        if (p.second) os << "*y" << (p.second > 1 ? "^" + std::to_string(p.second) : "");
        first = false;
    }
    return os.str();
}

TruncatedSeries TruncatedSeries::constant(int order, const BivarPoly& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::substituted_z(const BivarPoly& c) const {
    TruncatedSeries r(order());
    BivarPoly power(1);
    for (int i = 0; i <= order(); ++i) {
        r.c_[i] = c_[i] * power;
        power = power * c;
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    const int order = s.order();
    TruncatedSeries acc = TruncatedSeries::constant(order, BivarPoly(1));
    TruncatedSeries term = TruncatedSeries::constant(order, BivarPoly(1));
    for (int m = 1; m <= order; ++m) {
        term = term * s;
        TruncatedSeries scaled(order);
        for (int i = 0; i <= order; ++i) scaled.coeff(i) = term.coeff(i).scaled(Rational(1, m));
        term = scaled;
        acc += term;
    }
    return acc;
}

TruncatedSeries exp_linear(const BivarPoly& c, int order) {
    // exp(c z): coefficient of z^m is c^m / m!
    TruncatedSeries r(order);
    BivarPoly power(1);
    BigInt mfact = 1;
    for (int m = 0; m <= order; ++m) {
        if (m > 0) {
            power = power * c;
            mfact *= m;
        }
        r.coeff(m) = power.scaled(Rational(1, mfact));
    }
    return r;
}

BivarPoly build_r(int n) {
    const BivarPoly x = BivarPoly::x();
    const BivarPoly xy = BivarPoly::monomial(1, 1, 1);
    const BivarPoly one_plus_y = BivarPoly(1) + BivarPoly::y();
    BivarPoly r(1);
    for (int m = 1; m <= n; ++m) {
        BivarPoly lin = BivarPoly(1) + xy.scaled(m) + x.scaled(m - 1);  // 1 + mxy + (m-1)x
        BivarPoly r_next = lin * r + (x - x * x) * one_plus_y * r.dx();
        r = std::move(r_next);
    }
    return r;
}

namespace {

TruncatedSeries egf_from_rows(int order, const std::vector<IntPoly>& rows) {
    TruncatedSeries s(order);
    BigInt nfact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) nfact *= n;
        BivarPoly p = BivarPoly::from_x_poly(rows[n]);
        s.coeff(n) = p.scaled(Rational(1, nfact));
    }
    return s;
}

TruncatedSeries r_series(int order) {
    TruncatedSeries s(order);
    BigInt nfact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) nfact *= n;
        s.coeff(n) = build_r(n).scaled(Rational(1, nfact));
    }
    return s;
}

}  // namespace

Report check_r_consistency(int n_max) {
    Report rep("r-consistency");
    for (int n = 0; n <= n_max; ++n) {
        BigBTable big(n);
        BivarPoly r = build_r(n);
        bool coeffs_ok = true;
        for (int k = 0; k <= n && coeffs_ok; ++k)
            for (int j = 0; j <= n && coeffs_ok; ++j)
                coeffs_ok = (r.coeff(k, j) == Rational(big.at(n, k, j)));
        rep.check(coeffs_ok, "[x^k y^j] R(n) = B(n,k,j)", "n=" + std::to_string(n));
        rep.check(r == r.reversed(n, n), "R(n) = x^n y^n R(n)(1/x,1/y)",
                  "n=" + std::to_string(n));
        rep.check(r.evaluate_y(0) == to_rational(eulerian_poly_a(n)),
                  "R(n)(x,0) = type A polynomial", "n=" + std::to_string(n));
        rep.check(r.evaluate_y(1) == to_rational(eulerian_poly_b(n)),
                  "R(n)(x,1) = type B polynomial", "n=" + std::to_string(n));
    }
    return rep;
}

Report verify_egf(int order) {
    Report rep("egf");
    const BivarPoly x = BivarPoly::x();
    const BivarPoly one(1);
    const BivarPoly one_minus_x = one - x;
    const BivarPoly one_plus_y = one + BivarPoly::y();

    // shared right-hand side (1-x) e^{(1-x) z}
    TruncatedSeries rhs =
        exp_linear(one_minus_x, order) * TruncatedSeries::constant(order, one_minus_x);

    // type A
    std::vector<IntPoly> a_rows, b_rows;
    for (int n = 0; n <= order; ++n) {
        a_rows.push_back(eulerian_poly_a(n));
        b_rows.push_back(eulerian_poly_b(n));
    }
    TruncatedSeries a_series = egf_from_rows(order, a_rows);
    TruncatedSeries lhs_a =
        (TruncatedSeries::constant(order, one) -
         exp_linear(one_minus_x, order) * TruncatedSeries::constant(order, x)) *
        a_series;
    rep.check(lhs_a == rhs, "(1 - x e^{(1-x)z}) f_A = (1-x) e^{(1-x)z}",
              "order=" + std::to_string(order));

    // type B: denominator exponent doubled
    TruncatedSeries b_series = egf_from_rows(order, b_rows);
    TruncatedSeries lhs_b =
        (TruncatedSeries::constant(order, one) -
         exp_linear(one_minus_x.scaled(2), order) * TruncatedSeries::constant(order, x)) *
        b_series;
    rep.check(lhs_b == rhs, "(1 - x e^{2(1-x)z}) f_B = (1-x) e^{(1-x)z}",
              "order=" + std::to_string(order));

    // two-variable refinement: dilation by 1 + y in the denominator exponent
    TruncatedSeries lhs_r =
        (TruncatedSeries::constant(order, one) -
         exp_linear(one_minus_x * one_plus_y, order) * TruncatedSeries::constant(order, x)) *
        r_series(order);
    rep.check(lhs_r == rhs, "(1 - x e^{(1-x)(1+y)z}) f = (1-x) e^{(1-x)z}",
              "order=" + std::to_string(order));
    return rep;
}

Report verify_product_relation(int order) {
    Report rep("product-relation");
    const BivarPoly x = BivarPoly::x();
    const BivarPoly one_plus_y = BivarPoly(1) + BivarPoly::y();
    const BivarPoly xm1_y = (x - BivarPoly(1)) * BivarPoly::y();

    std::vector<IntPoly> a_rows;
    for (int n = 0; n <= order; ++n) a_rows.push_back(eulerian_poly_a(n));
    TruncatedSeries a_dilated = egf_from_rows(order, a_rows).substituted_z(one_plus_y);
    TruncatedSeries expected = a_dilated * exp_linear(xm1_y, order);
    rep.check(r_series(order) == expected, "f = f_A(x, (1+y)z) e^{(x-1) y z}",
              "order=" + std::to_string(order));
    return rep;
}

}  // namespace seb
