#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "seb/bigint.hpp"

namespace seb {

/// Dense univariate polynomial over an exact coefficient ring T. The
/// coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and degree() == -1 for it. T only needs +, -, *,
/// == and construction from int; nesting Poly<Poly<T>> gives a cheap
/// bivariate representation where one variable's degree stays small.
template <typename T>
class Poly {
public:
    Poly() = default;
    Poly(const T& constant) {  // NOLINT: implicit by design, scalars are polynomials
        if (!(constant == T(0))) c_.push_back(constant);
    }
    Poly(int constant) : Poly(T(constant)) {}

    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const T& coeff, int power) {
        if (power < 0) throw std::invalid_argument("Poly::monomial: negative power");
        if (coeff == T(0)) return Poly();
        std::vector<T> c(power + 1, T(0));
        c[power] = coeff;
        return Poly(std::move(c));
    }
    static Poly variable() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& leading() const {
        if (c_.empty()) throw std::invalid_argument("Poly::leading: zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly&) const = default;

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const T& s) const {
        Poly r;
        if (s == T(0)) return r;
        r.c_ = c_;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T(static_cast<int>(i));
        return Poly(std::move(c));
    }

    /// x^n * p(1/x): coefficient mirror within degree n. Requires deg <= n.
    Poly reversed(int n) const {
        if (degree() > n) throw std::invalid_argument("Poly::reversed: degree exceeds n");
        std::vector<T> c(n + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[n - i] = c_[i];
        return Poly(std::move(c));
    }

    /// Horner evaluation in any ring U that T converts into.
    template <typename U>
    U evaluate(const U& x) const {
        U acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == T(0)) continue;
            if (!first) os << " + ";
            os << p.c_[i];
            if (i >= 1) os << "*x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

/// Exact conversion back to integers; throws if any coefficient is fractional.
inline IntPoly to_integer(const RatPoly& p) {
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (denominator(x) != 1)
            throw std::logic_error("to_integer: fractional coefficient " + to_string(x));
        c.push_back(numerator(x));
    }
    return IntPoly(std::move(c));
}

}  // namespace seb
