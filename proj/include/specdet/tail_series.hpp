#pragma once

// Formal expansion of mu_k^{-s} for large k. With M = ord(word) and x = 1/k,
//
//   mu_k^{-s} = k^{-Ms} exp(-s L(x)),
//   L(x) = sum_t m_t log(1 + a_t x) = sum_{p>=1} (-1)^{p+1} (sum_t m_t a_t^p)/p x^p,
//
// so exp(-s L(x)) = sum_j c_j(s) x^j with c_0 = 1 and every c_j (j >= 1) a
// polynomial in s with zero constant term: c_j(0) = 0 holds exactly because
// the recurrence only ever multiplies by s. Coefficients come from the
// power-series ODE  c' = -s L'(x) c, i.e.  j c_j = -s sum_{p=1}^{j} p l_p c_{j-p}.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "specdet/spectra.hpp"

namespace specdet {

// Polynomial in s, coeff[i] = coefficient of s^i.
struct SPoly {
    std::vector<double> coeff;

    double value_at(double s) const {
        double acc = 0.0;
        for (std::size_t i = coeff.size(); i-- > 0;)
            acc = acc * s + coeff[i];
        return acc;
    }

    // Upper bound |c(s)| <= sum |coeff_i| |s|^i, used in error estimates.
    double abs_value_at(double s) const {
        double acc = 0.0;
        const double t = std::abs(s);
        for (std::size_t i = coeff.size(); i-- > 0;)
            acc = acc * t + std::abs(coeff[i]);
        return acc;
    }

    double derivative_at_zero() const { return coeff.size() > 1 ? coeff[1] : 0.0; }
    double second_derivative_at_zero() const { return coeff.size() > 2 ? 2.0 * coeff[2] : 0.0; }
};

struct TailCoefficients {
    std::vector<SPoly> c; // c[j], j = 0..J
};

// Log-series coefficients l_p = (-1)^{p+1} (sum_t m_t a_t^p) / p, p = 1..P.
inline std::vector<double> log_series_coefficients(const OperatorWord& word, std::size_t max_p) {
    std::vector<double> ell(max_p + 1, 0.0);
    for (std::size_t p = 1; p <= max_p; ++p) {
        double s_p = 0.0;
        for (const Factor& f : word.factors())
            s_p += f.exponent * std::pow(f.shift, static_cast<double>(p));
        ell[p] = (p % 2 == 1 ? s_p : -s_p) / static_cast<double>(p);
    }
    return ell;
}

inline TailCoefficients tail_coefficients(const OperatorWord& word, std::size_t J) {
    if (word.empty())
        throw std::invalid_argument("tail_coefficients: empty word");
    if (J < 1)
        throw std::invalid_argument("tail_coefficients: J must be >= 1");
    const std::vector<double> ell = log_series_coefficients(word, J);

    TailCoefficients out;
    out.c.resize(J + 1);
    out.c[0].coeff = {1.0};
    for (std::size_t j = 1; j <= J; ++j) {
        // inner(s) = sum_{p=1}^{j} p l_p c_{j-p}(s)
        std::vector<double> inner(j, 0.0); // degree of c_{j-p} is <= j-1
        for (std::size_t p = 1; p <= j; ++p) {
            const double w = static_cast<double>(p) * ell[p];
            if (w == 0.0)
                continue;
            const SPoly& prev = out.c[j - p];
            for (std::size_t i = 0; i < prev.coeff.size(); ++i)
                inner[i] += w * prev.coeff[i];
        }
        // c_j = (-s / j) inner: multiply by s (shift up), scale by -1/j
        SPoly cj;
        cj.coeff.assign(j + 1, 0.0);
        for (std::size_t i = 0; i < inner.size(); ++i)
            cj.coeff[i + 1] = -inner[i] / static_cast<double>(j);
        out.c[j] = std::move(cj);
    }
    return out;
}

} // namespace specdet
