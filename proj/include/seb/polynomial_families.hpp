#pragma once

#include <vector>

#include "seb/poly.hpp"
#include "seb/report.hpp"

namespace seb {

/// Type A / type B Eulerian polynomials in one variable.
IntPoly eulerian_poly_a(int n);
IntPoly eulerian_poly_b(int n);

/// Row generating polynomials of the descent statistic with the sign count
/// fixed: family[j] has coefficient B(n,k,j) at x^k. Built by the
/// derivative recurrence, with the boundary members pinned to the type A
/// Eulerian polynomial and its x-shift.
std::vector<IntPoly> build_p_family(int n);

/// Sign-count generating polynomials with the descent count fixed:
/// family[k] has coefficient B(n,k,j) at y^j.
std::vector<IntPoly> build_q_family(int n);

/// The refined quotients: family[j] has coefficient b(n,k,j) at x^k.
/// Built by the rational-coefficient recurrence; integrality of the result
/// is asserted during construction.
std::vector<IntPoly> build_little_p_family(int n);

/// Same family by the row-sum recurrence (shift the first j summands by x).
std::vector<IntPoly> build_little_p_family_sum(int n);

/// C(x + shift, n) expanded over exact rationals.
RatPoly binomial_poly(int shift, int n);

/// Both power-basis expansion identities for the Q family, as exact
/// bivariate polynomial identities (not sampled points).
Report worpitzky_q(int n);

/// sum_k b(n,k,j) C(x+n-k, n) = x^j (1+x)^(n-j) as an exact identity.
Report worpitzky_little_b(int n, int j);
Report check_worpitzky(int n_max);

/// Coefficient mirror symmetries of the P and Q families.
Report check_poly_symmetries(int n_max);

/// Coefficient consistency with the number tables, agreement of the two
/// little-p constructions, the binomial factor between P and little p,
/// degree bookkeeping and the evaluation sums at x = 1.
Report check_polynomial_families(int n_max);

}  // namespace seb
