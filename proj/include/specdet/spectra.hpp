#pragma once

// Data model for commuting operator families with explicit spectra.
//
// An operator is a word of shifted-index factors: its eigenvalue at index k is
//   mu_k = prod_t (k + a_t)^{m_t},   multiplicity d(k),
// over a shared SpectralBase (index start k0, polynomial multiplicity
// d(k) = sum_r d_r k^r with exact rational d_r, finite exception list).
// Operators over the same base commute by construction: they are
// simultaneously diagonal in the shared eigenbasis.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specdet/rational.hpp"

namespace specdet {

// One factor (k + shift)^{exponent} of an operator word.
struct Factor {
    double shift = 0.0;
    double exponent = 1.0; // must be positive

    friend bool operator==(const Factor&, const Factor&) = default;
};

// Canonical product of shifted-index factors. Canonical form: shifts strictly
// increasing, equal shifts merged by adding exponents. Words are built from
// exact inputs, so shift comparison is exact comparison of the stored doubles.
class OperatorWord {
public:
    OperatorWord() = default;

    explicit OperatorWord(std::vector<Factor> factors) {
        for (const Factor& f : factors)
            append(f);
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    // ord = sum of exponents; the paper-level "order" of the operator.
    double order() const {
        double total = 0.0;
        for (const Factor& f : factors_)
            total += f.exponent;
        return total;
    }

    double max_abs_shift() const {
        double m = 0.0;
        for (const Factor& f : factors_)
            m = std::max(m, std::abs(f.shift));
        return m;
    }

    // log mu_k = sum_t m_t log(k + a_t); requires k + a_t > 0 for all t.
    double log_eigenvalue(double k) const {
        double acc = 0.0;
        for (const Factor& f : factors_)
            acc += f.exponent * std::log(k + f.shift);
        return acc;
    }

    double eigenvalue(double k) const {
        double acc = 1.0;
        for (const Factor& f : factors_)
            acc *= std::pow(k + f.shift, f.exponent);
        return acc;
    }

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

private:
    void append(const Factor& f) {
        if (!(f.exponent > 0.0) || !std::isfinite(f.exponent))
            throw std::invalid_argument("OperatorWord: factor exponent must be positive");
        if (!std::isfinite(f.shift))
            throw std::invalid_argument("OperatorWord: factor shift must be finite");
        auto it = std::lower_bound(factors_.begin(), factors_.end(), f.shift,
                                   [](const Factor& g, double s) { return g.shift < s; });
        if (it != factors_.end() && it->shift == f.shift)
            it->exponent += f.exponent;
        else
            factors_.insert(it, f);
    }

    friend OperatorWord product(const std::vector<OperatorWord>& words);
    friend OperatorWord power(const OperatorWord& word, double p);

    std::vector<Factor> factors_;
};

// Product of operator words: factor concatenation with shift merging.
// The empty product is rejected.
inline OperatorWord product(const std::vector<OperatorWord>& words) {
    if (words.empty())
        throw std::invalid_argument("product: empty operator list");
    OperatorWord result;
    for (const OperatorWord& w : words) {
        if (w.empty())
            throw std::invalid_argument("product: empty operator word");
        for (const Factor& f : w.factors())
            result.append(f);
    }
    return result;
}

inline OperatorWord product(const OperatorWord& a, const OperatorWord& b) {
    return product(std::vector<OperatorWord>{a, b});
}

// word^p for positive real p: every exponent scales by p.
inline OperatorWord power(const OperatorWord& word, double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("power: exponent must be positive");
    OperatorWord result = word;
    for (Factor& f : result.factors_)
        f.exponent *= p;
    return result;
}

// Shared spectral base: index start, polynomial multiplicity with exact
// rational coefficients, and a finite list of index exceptions.
struct SpectralBase {
    long k0 = 0;
    std::vector<Rational> multiplicity_coeffs; // d_r, r = 0..R
    std::vector<std::pair<long, long>> exceptions;

    std::size_t degree() const {
        return multiplicity_coeffs.empty() ? 0 : multiplicity_coeffs.size() - 1;
    }

    Rational multiplicity_poly(long k) const {
        Rational acc = 0;
        Rational kp = 1;
        for (const Rational& d : multiplicity_coeffs) {
            acc += d * kp;
            kp *= k;
        }
        return acc;
    }

    long max_exception_index() const {
        long m = k0 - 1;
        for (const auto& [k, mult] : exceptions)
            m = std::max(m, k);
        return m;
    }

    // Validation per the model's invariants: d(k) must be a positive integer
    // on a long sampled prefix, the leading coefficient positive, exception
    // indices distinct and >= k0 with positive multiplicities.
    void validate() const {
        if (k0 != 0 && k0 != 1)
            throw std::invalid_argument("SpectralBase: index start must be 0 or 1");
        if (multiplicity_coeffs.empty())
            throw std::invalid_argument("SpectralBase: multiplicity polynomial is empty");
        if (multiplicity_coeffs.back() <= 0)
            throw std::invalid_argument("SpectralBase: leading multiplicity coefficient must be positive");
        std::map<long, long> seen;
        for (const auto& [k, mult] : exceptions) {
            if (k < k0)
                throw std::invalid_argument("SpectralBase: exception index below k0");
            if (mult <= 0)
                throw std::invalid_argument("SpectralBase: exception multiplicity must be positive");
            if (!seen.emplace(k, mult).second)
                throw std::invalid_argument("SpectralBase: duplicate exception index");
        }
        for (long k = k0; k <= k0 + 10000; ++k) {
            if (seen.count(k))
                continue;
            Rational d = multiplicity_poly(k);
            if (!is_integer(d) || d <= 0)
                throw std::invalid_argument("SpectralBase: d(" + std::to_string(k) +
                                            ") is not a positive integer");
        }
    }
};

// Multiplicity at index k: exception value if present, otherwise d(k).
inline long multiplicity(const SpectralBase& base, long k) {
    if (k < base.k0)
        throw std::out_of_range("multiplicity: index below k0");
    for (const auto& [ek, em] : base.exceptions)
        if (ek == k)
            return em;
    return base.multiplicity_poly(k).template convert_to<long>();
}

// Eigenvalue of a word at index k (positive by the validity invariant).
inline double eigenvalue(const OperatorWord& word, const SpectralBase& base, long k) {
    if (k < base.k0)
        throw std::out_of_range("eigenvalue: index below k0");
    return word.eigenvalue(static_cast<double>(k));
}

// A word is valid on a base when k0 + a_t > 0 for every factor (positivity /
// invertibility of the modeled operator) and its order is positive.
inline void validate_word(const OperatorWord& word, const SpectralBase& base) {
    if (word.empty())
        throw std::invalid_argument("operator word has no factors");
    for (const Factor& f : word.factors())
        if (!(static_cast<double>(base.k0) + f.shift > 0.0))
            throw std::invalid_argument("operator word factor shift " + std::to_string(f.shift) +
                                        " makes k0 + a nonpositive");
    if (!(word.order() > 0.0))
        throw std::invalid_argument("operator word must have positive order");
}

// A named, validated family of commuting operators over one base.
class CommutingFamily {
public:
    CommutingFamily(SpectralBase base, std::vector<std::pair<std::string, OperatorWord>> ops)
        : base_(std::move(base)), operators_(std::move(ops)) {
        base_.validate();
        if (operators_.empty())
            throw std::invalid_argument("CommutingFamily: no operators");
        for (const auto& [name, word] : operators_) {
            if (name.empty())
                throw std::invalid_argument("CommutingFamily: empty operator name");
            validate_word(word, base_);
        }
        for (std::size_t i = 0; i < operators_.size(); ++i)
            for (std::size_t j = i + 1; j < operators_.size(); ++j)
                if (operators_[i].first == operators_[j].first)
                    throw std::invalid_argument("CommutingFamily: duplicate operator name '" +
                                                operators_[i].first + "'");
    }

    const SpectralBase& base() const { return base_; }
    const std::vector<std::pair<std::string, OperatorWord>>& operators() const {
        return operators_;
    }

    const OperatorWord& operator_named(const std::string& name) const {
        for (const auto& [n, w] : operators_)
            if (n == name)
                return w;
        throw std::invalid_argument("CommutingFamily: no operator named '" + name + "'");
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(operators_.size());
        for (const auto& [n, w] : operators_)
            out.push_back(n);
        return out;
    }

private:
    SpectralBase base_;
    std::vector<std::pair<std::string, OperatorWord>> operators_;
};

// The bundled "circle" model: |D| + a on the unit circle. Index start 0,
// multiplicity 2 for every k >= 1, and the single k = 0 mode.
inline SpectralBase circle_base() {
    SpectralBase base;
    base.k0 = 0;
    base.multiplicity_coeffs = {Rational(2)};
    base.exceptions = {{0, 1}};
    return base;
}

// The bundled "flat" model: d(k) = 1 from k = 0.
inline SpectralBase flat_base() {
    SpectralBase base;
    base.k0 = 0;
    base.multiplicity_coeffs = {Rational(1)};
    return base;
}

} // namespace specdet
