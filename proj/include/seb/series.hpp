#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seb/poly.hpp"
#include "seb/report.hpp"

namespace seb {

/// Sparse exact polynomial in (x, y) over the rationals. Zero coefficients
/// are never stored, so map equality is polynomial equality.
class BivarPoly {
public:
    BivarPoly() = default;
    BivarPoly(const Rational& constant);  // NOLINT: scalars embed implicitly
    BivarPoly(int constant) : BivarPoly(Rational(constant)) {}

    static BivarPoly monomial(const Rational& c, int xpow, int ypow);
    static BivarPoly x() { return monomial(1, 1, 0); }
    static BivarPoly y() { return monomial(1, 0, 1); }
    /// Embed a univariate polynomial as a polynomial in x alone.
    static BivarPoly from_x_poly(const IntPoly& p);
    static BivarPoly from_x_poly(const RatPoly& p);

    bool is_zero() const { return c_.empty(); }
    Rational coeff(int xpow, int ypow) const;
    int x_degree() const;
    int y_degree() const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    BivarPoly operator-() const;
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
    BivarPoly scaled(const Rational& s) const;

    /// Formal partial derivative with respect to x.
    BivarPoly dx() const;

    /// x^nx y^ny p(1/x, 1/y); requires the degrees to fit.
    BivarPoly reversed(int nx, int ny) const;

    /// Substitute a rational value for y, leaving a polynomial in x.
    RatPoly evaluate_y(const Rational& y) const;

    bool operator==(const BivarPoly&) const = default;

    const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }
    std::string str() const;

private:
    void set(int xpow, int ypow, const Rational& v);
    std::map<std::pair<int, int>, Rational> c_;
};

/// Power series in z truncated at a fixed order, with BivarPoly
/// coefficients. Two series compare equal iff all stored coefficients match.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BivarPoly& coeff(int i) const { return c_.at(i); }
    BivarPoly& coeff(int i) { return c_.at(i); }

    static TruncatedSeries constant(int order, const BivarPoly& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Replace z by c z: coefficient i picks up a factor c^i.
    TruncatedSeries substituted_z(const BivarPoly& c) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BivarPoly> c_;  // c_[i] multiplies z^i
};

/// exp of a series with zero constant term (usage error otherwise).
TruncatedSeries series_exp(const TruncatedSeries& s);

/// exp(c z) to the given order.
TruncatedSeries exp_linear(const BivarPoly& c, int order);

/// The bivariate descent/sign generating polynomial, built by the
/// x-derivative recurrence from 1.
BivarPoly build_r(int n);

/// Coefficients of build_r against the number table, the specializations at
/// y = 0 and y = 1, and the two-variable coefficient mirror symmetry.
Report check_r_consistency(int n_max);

/// The three exponential generating function identities in
/// cleared-denominator form (the denominators are not invertible over
/// polynomial coefficients, so both sides are multiplied out).
Report verify_egf(int order);

/// The product decomposition of the signed series in terms of the type A
/// series with z dilated by 1 + y.
Report verify_product_relation(int order);

}  // namespace seb
