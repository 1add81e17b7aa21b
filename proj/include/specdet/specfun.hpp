#pragma once

// High-accuracy real special functions for the zeta continuation machinery:
//
//   hurwitz_zeta(s, a)           zeta_H(s,a) = sum_{k>=0} (k+a)^{-s}, s != 1
//   hurwitz_zeta_ds(s, a)        d/ds zeta_H(s,a)
//   hurwitz_zeta_laurent_at_1(a) (1, -psi(a)):  zeta_H(1+e,a) = 1/e - psi(a) + O(e)
//   digamma(a), log_gamma(a)
//
// Continuation strategy, all in plain double with propagated error estimates:
//
//  * s > -3 (and any s with large a): Euler-Maclaurin with a parameter shift.
//    Sum the first N terms directly, then expand at x = a + N:
//
//      zeta_H(s,a) = sum_{k<N} (k+a)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
//                  + sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
//
//    with (s)_{2j-1} = s(s+1)...(s+2j-2). N adapts until the first omitted
//    term is below target. The s-derivative rides along through every term.
//
//  * s <= -3 with small a: Hurwitz's formula. There 1-s >= 4, so
//
//      zeta_H(s,a) = 2 Gamma(1-s) (2pi)^{s-1} [ sin(pi s/2) C + cos(pi s/2) S ],
//      C = sum_{n>=1} cos(2 pi n a) n^{s-1},  S = sum_{n>=1} sin(2 pi n a) n^{s-1}
//
//    converges absolutely and keeps every intermediate at the scale of the
//    result, where Euler-Maclaurin would cancel ~x^{|s|+1} against the head.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "specdet/bernoulli.hpp"
#include "specdet/errors.hpp"
#include "specdet/summation.hpp"

namespace specdet {

// Value, s-derivative and an error estimate from one continuation pass.
struct HurwitzResult {
    double value = 0.0;
    double ds_value = 0.0;
    double error = 0.0;
};

namespace detail {

inline void require_positive_parameter(double a, const char* who) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error(std::string(who) + ": parameter a must be positive and finite");
}

} // namespace detail

// psi(a) by upward recurrence to x >= 16, then the asymptotic series
// psi(x) ~ log x - 1/(2x) - sum_j B_{2j}/(2j x^{2j}).
inline double digamma(double a) {
    detail::require_positive_parameter(a, "digamma");
    const BernoulliTable& table = detail::shared_bernoulli_table();
    double shift = 0.0;
    double x = a;
    while (x < 16.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    double result = std::log(x) - 0.5 / x;
    const double inv_x2 = 1.0 / (x * x);
    double power = inv_x2;
    for (std::size_t j = 1; j <= 10; ++j) {
        result -= to_double(table.at(2 * j)) / static_cast<double>(2 * j) * power;
        power *= inv_x2;
    }
    return result + shift;
}

// log Gamma(a) by upward recurrence to x >= 16, then Stirling's series.
inline double log_gamma(double a) {
    detail::require_positive_parameter(a, "log_gamma");
    const BernoulliTable& table = detail::shared_bernoulli_table();
    double shift = 0.0;
    double x = a;
    while (x < 16.0) {
        shift -= std::log(x);
        x += 1.0;
    }
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    double result = (x - 0.5) * std::log(x) - x + half_log_two_pi;
    const double inv_x2 = 1.0 / (x * x);
    double power = 1.0 / x;
    for (std::size_t j = 1; j <= 10; ++j) {
        result += to_double(table.at(2 * j)) /
                  static_cast<double>((2 * j) * (2 * j - 1)) * power;
        power *= inv_x2;
    }
    return result + shift;
}

namespace detail {

// One Euler-Maclaurin attempt with head length N. Returns false when the
// asymptotic terms fail to reach `target` before they start growing.
inline bool hurwitz_em_attempt(double s, double a, long head_terms, double target,
                               HurwitzResult& out) {
    const std::vector<double>& b2jf = b2j_over_factorial();
    const std::size_t j_max = b2jf.size() - 1;

    KahanAccumulator head;
    KahanAccumulator head_ds;
    for (long k = 0; k < head_terms; ++k) {
        const double base = static_cast<double>(k) + a;
        const double term = std::pow(base, -s);
        head.add(term);
        head_ds.add(-term * std::log(base));
    }

    const double x = a + static_cast<double>(head_terms);
    const double log_x = std::log(x);
    const double x_pow = std::pow(x, -s);

    // Integral term x^{1-s}/(s-1) and boundary term x^{-s}/2.
    const double integral = std::pow(x, 1.0 - s) / (s - 1.0);
    const double d_integral =
        -std::pow(x, 1.0 - s) * (log_x / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    double value = integral + 0.5 * x_pow;
    double ds_value = d_integral - 0.5 * x_pow * log_x;

    // Bernoulli tail: t_j = B_{2j}/(2j)! * (s)_{2j-1} * x^{-s-2j+1}.
    double pochhammer = s;                // (s)_{2j-1} at j = 1
    double d_pochhammer = 1.0;            // its s-derivative
    double power = std::pow(x, -s - 1.0); // x^{-s-2j+1} at j = 1
    const double inv_x2 = 1.0 / (x * x);
    double prev_magnitude = std::numeric_limits<double>::infinity();
    bool converged = false;
    double omitted = 0.0;

    for (std::size_t j = 1; j <= j_max; ++j) {
        const double term = b2jf[j] * pochhammer * power;
        const double d_term = b2jf[j] * (d_pochhammer * power - pochhammer * power * log_x);
        const double magnitude = std::max(std::abs(term), std::abs(d_term));
        if (magnitude > prev_magnitude && j > 2)
            break; // asymptotic divergence set in; need a larger shift
        value += term;
        ds_value += d_term;
        prev_magnitude = magnitude;
        if (magnitude <= target) {
            converged = true;
            omitted = magnitude;
            break;
        }
        // advance to j+1: multiply Pochhammer by (s+2j-1)(s+2j)
        const double f1 = s + static_cast<double>(2 * j - 1);
        const double f2 = s + static_cast<double>(2 * j);
        d_pochhammer = d_pochhammer * f1 * f2 + pochhammer * (f1 + f2);
        pochhammer *= f1 * f2;
        power *= inv_x2;
    }
    if (!converged)
        return false;

    constexpr double eps = 2.220446049250313e-16;
    out.value = head.sum + value;
    out.ds_value = head_ds.sum + ds_value;
    out.error = omitted + head.rounding_error() + head_ds.rounding_error() +
                8.0 * eps * (std::abs(integral) + std::abs(d_integral));
    return true;
}

// Hurwitz's formula for s <= -3. Reduces a to (0,1] by subtracting the first
// floor(a) terms of the defining series, then sums the two Fourier series.
inline HurwitzResult hurwitz_reflection(double s, double a) {
    constexpr double eps = 2.220446049250313e-16;
    constexpr double two_pi = 6.2831853071795864769;

    KahanAccumulator shift;
    KahanAccumulator shift_ds;
    double frac = a;
    while (frac > 1.0) {
        frac -= 1.0;
    }
    long steps = static_cast<long>(std::llround(a - frac));
    for (long k = 0; k < steps; ++k) {
        const double base = frac + static_cast<double>(k);
        const double term = std::pow(base, -s);
        shift.add(-term);
        shift_ds.add(term * std::log(base));
    }

    // C = sum cos(2 pi n frac) n^{s-1}, S likewise with sin; plus the
    // log-weighted sums for the s-derivative.
    KahanAccumulator c_sum, s_sum, c_log_sum, s_log_sum;
    const double angle_step = two_pi * frac;
    double truncation = 0.0;
    for (long n = 1; n <= 2000000; ++n) {
        const double weight = std::pow(static_cast<double>(n), s - 1.0);
        const double angle = angle_step * static_cast<double>(n);
        const double log_n = std::log(static_cast<double>(n));
        c_sum.add(std::cos(angle) * weight);
        s_sum.add(std::sin(angle) * weight);
        c_log_sum.add(std::cos(angle) * weight * log_n);
        s_log_sum.add(std::sin(angle) * weight * log_n);
        // remaining mass bounded by integral of x^{s-1} log x
        const double bound = weight * static_cast<double>(n) * (log_n + 1.0) / (-s);
        if (n >= 8 && bound < 1e-17 * (1.0 + std::abs(c_sum.sum) + std::abs(s_sum.sum))) {
            truncation = bound;
            break;
        }
    }

    const double gamma_factor = std::exp(log_gamma(1.0 - s));
    const double prefactor = 2.0 * gamma_factor * std::pow(two_pi, s - 1.0);
    const double sin_half = std::sin(1.5707963267948966192 * s);
    const double cos_half = std::cos(1.5707963267948966192 * s);
    const double combo = sin_half * c_sum.sum + cos_half * s_sum.sum;
    const double value = prefactor * combo;

    // d/ds: prefactor' = prefactor (log(2pi) - psi(1-s)); series terms pick up
    // log n; the trig pair rotates with pi/2.
    const double log_factor = std::log(two_pi) - digamma(1.0 - s);
    const double d_combo = 1.5707963267948966192 * (cos_half * c_sum.sum - sin_half * s_sum.sum) +
                           sin_half * c_log_sum.sum + cos_half * s_log_sum.sum;
    const double ds_value = prefactor * (log_factor * combo + d_combo);

    HurwitzResult out;
    out.value = value + shift.sum;
    out.ds_value = ds_value + shift_ds.sum;
    out.error = shift.rounding_error() + shift_ds.rounding_error() +
                8.0 * eps * std::abs(prefactor) *
                    (std::abs(combo) + std::abs(d_combo) + c_log_sum.abs_sum + truncation) +
                8.0 * eps * (std::abs(value) + std::abs(ds_value));
    return out;
}

// Shared continuation driver.
inline HurwitzResult hurwitz_em(double s, double a, double target = 1e-14) {
    require_positive_parameter(a, "hurwitz_zeta");
    if (s == 1.0)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!std::isfinite(s))
        throw std::domain_error("hurwitz_zeta: s must be finite");

    // x = a + N comfortably past the |s| scale keeps the Bernoulli tail
    // convergent; for very negative s that inflates x^{|s|+1} cancellation,
    // so small a goes through the reflection route instead.
    double span = std::max(12.0, 1.2 * std::abs(s) + 2.0);
    if (s <= -3.0 && a < span && 1.0 - s < 170.0)
        return hurwitz_reflection(s, a);

    for (int attempt = 0; attempt < 8; ++attempt) {
        long head_terms = static_cast<long>(std::max(0.0, std::ceil(span - a)));
        HurwitzResult out;
        if (hurwitz_em_attempt(s, a, head_terms, target, out))
            return out;
        span *= 2.0;
    }
    throw ContinuationFailure("hurwitz_zeta: Euler-Maclaurin tail did not converge for s=" +
                              std::to_string(s) + ", a=" + std::to_string(a));
}

} // namespace detail

// Analytic continuation of zeta_H(s,a) = sum_{k>=0} (k+a)^{-s}.
inline double hurwitz_zeta(double s, double a) {
    return detail::hurwitz_em(s, a).value;
}

// d/ds zeta_H(s,a). At s = 0 this satisfies Lerch's identity
// zeta_H'(0,a) = log Gamma(a) - log(2 pi)/2.
inline double hurwitz_zeta_ds(double s, double a) {
    return detail::hurwitz_em(s, a).ds_value;
}

inline HurwitzResult hurwitz_zeta_full(double s, double a, double target = 1e-14) {
    return detail::hurwitz_em(s, a, target);
}

// Laurent data of zeta_H at its pole: zeta_H(1+e, a) = 1/e - psi(a) + O(e).
// Returns (pole coefficient, constant term).
struct LaurentAtOne {
    double pole_coefficient;
    double constant_term;
};

inline LaurentAtOne hurwitz_zeta_laurent_at_1(double a) {
    detail::require_positive_parameter(a, "hurwitz_zeta_laurent_at_1");
    return {1.0, -digamma(a)};
}

} // namespace specdet
