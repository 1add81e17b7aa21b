#pragma once

#include <cstddef>
#include <vector>

#include "specdet/rational.hpp"

namespace specdet {

// Exact Bernoulli numbers B_0 .. B_{2N}, sign convention B_1 = -1/2.
//
// Built from the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 (m >= 1),
// so the table is recurrence-consistent by construction. Immutable once built.
struct BernoulliTable {
    std::vector<Rational> values; // values[m] = B_m

    explicit BernoulliTable(std::size_t max_index) {
        values.reserve(max_index + 1);
        values.emplace_back(1); // B_0
        for (std::size_t m = 1; m <= max_index; ++m) {
            Rational acc = 0;
            for (std::size_t j = 0; j < m; ++j)
                acc += Rational(binomial(static_cast<unsigned>(m + 1),
                                         static_cast<unsigned>(j))) *
                       values[j];
            values.push_back(-acc / Rational(static_cast<int>(m + 1)));
        }
    }

    const Rational& at(std::size_t m) const { return values.at(m); }
    std::size_t max_index() const { return values.size() - 1; }
};

namespace detail {

inline const BernoulliTable& shared_bernoulli_table() {
    static const BernoulliTable table(128);
    return table;
}

// b2j_over_factorial()[j] = B_{2j} / (2j)! as double, j = 1..64.
// These are the Euler-Maclaurin tail weights; |B_{2j}/(2j)!| ~ 2 (2pi)^{-2j}.
inline const std::vector<double>& b2j_over_factorial() {
    static const std::vector<double> weights = [] {
        const BernoulliTable& table = shared_bernoulli_table();
        std::vector<double> w;
        w.push_back(0.0); // unused slot j = 0
        Rational factorial = 1;
        for (std::size_t j = 1; 2 * j <= table.max_index(); ++j) {
            factorial *= Rational(static_cast<int>(2 * j - 1)) *
                         Rational(static_cast<int>(2 * j));
            w.push_back(to_double(table.at(2 * j) / factorial));
        }
        return w;
    }();
    return weights;
}

} // namespace detail

} // namespace specdet
