#include "linalg.hpp"

#include <stdexcept>

namespace orbiroot::detail {

std::optional<std::vector<Rational>> IncrementalSpan::insert(std::vector<Rational> v) {
    if (v.size() != dimension_) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    const std::size_t n = rows_.size();
    // Combination expressing the current residual as v - sum(c_k v_k).
    std::vector<Rational> combination(track_ ? n + 1 : 0, Rational(0));
    if (track_) {
        combination[n] = 1;
    }

    for (const auto& row : rows_) {
        const Rational& coeff = v[row.pivot];
        if (coeff.is_zero()) {
            continue;
        }
        Rational factor = coeff;  // row.values[pivot] == 1
        for (std::size_t j = row.pivot; j < dimension_; ++j) {
            if (!row.values[j].is_zero()) {
                v[j] -= factor * row.values[j];
            }
        }
        for (std::size_t k = 0; k < row.combination.size(); ++k) {
            if (!row.combination[k].is_zero()) {
                combination[k] -= factor * row.combination[k];
            }
        }
    }

    std::size_t pivot = 0;
    while (pivot < dimension_ && v[pivot].is_zero()) {
        ++pivot;
    }
    if (pivot == dimension_) {
        // 0 = v - sum(...)  =>  v = -sum(combination[k] v_k)
        std::vector<Rational> coefficients(track_ ? n : 0);
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            coefficients[k] = -combination[k];
        }
        return coefficients;
    }

    Rational inverse = 1 / v[pivot];
    for (std::size_t j = pivot; j < dimension_; ++j) {
        if (!v[j].is_zero()) {
            v[j] *= inverse;
        }
    }
    for (auto& c : combination) {
        if (!c.is_zero()) {
            c *= inverse;
        }
    }
    // Keep rows ordered by pivot so reduction proceeds left to right.
    Row row{std::move(v), pivot, std::move(combination)};
    if (track_) {
        for (auto& existing : rows_) {
            existing.combination.resize(n + 1, Rational(0));
        }
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < pivot) {
        ++it;
    }
    rows_.insert(it, std::move(row));
    return std::nullopt;
}

bool IncrementalSpan::contains(std::vector<Rational> v) const {
    if (v.size() != dimension_) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    for (const auto& row : rows_) {
        const Rational coeff = v[row.pivot];
        if (coeff.is_zero()) {
            continue;
        }
        for (std::size_t j = row.pivot; j < dimension_; ++j) {
            if (!row.values[j].is_zero()) {
                v[j] -= coeff * row.values[j];
            }
        }
    }
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<BigInt> IntegerSpan::reduce(const std::vector<Rational>& v) const {
    if (v.size() != dimension_) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    BigInt scale = 1;
    for (const auto& x : v) {
        if (!x.is_zero()) {
            const BigInt& d = boost::multiprecision::denominator(x);
            scale = scale / boost::multiprecision::gcd(scale, d) * d;
        }
    }
    std::vector<BigInt> w(dimension_);
    for (std::size_t j = 0; j < dimension_; ++j) {
        if (!v[j].is_zero()) {
            w[j] = boost::multiprecision::numerator(v[j]) * (scale / boost::multiprecision::denominator(v[j]));
        }
    }
    for (const auto& row : rows_) {
        if (w[row.pivot].is_zero()) {
            continue;
        }
        const BigInt& a = row.values[row.pivot];
        BigInt g = boost::multiprecision::gcd(a, w[row.pivot]);
        BigInt fa = a / g;
        BigInt fb = w[row.pivot] / g;
        for (std::size_t j = row.pivot; j < dimension_; ++j) {
            if (!row.values[j].is_zero()) {
                w[j] = fa * w[j] - fb * row.values[j];
            } else if (!w[j].is_zero()) {
                w[j] *= fa;
            }
        }
        for (std::size_t j = 0; j < row.pivot; ++j) {
            if (!w[j].is_zero()) {
                w[j] *= fa;
            }
        }
        BigInt content = 0;
        for (const auto& x : w) {
            if (!x.is_zero()) {
                content = boost::multiprecision::gcd(content, x);
            }
        }
        if (content > 1) {
            for (auto& x : w) {
                x /= content;
            }
        }
    }
    return w;
}

bool IntegerSpan::insert(const std::vector<Rational>& v) {
    auto w = reduce(v);
    std::size_t pivot = 0;
    while (pivot < dimension_ && w[pivot].is_zero()) {
        ++pivot;
    }
    if (pivot == dimension_) {
        return false;
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < pivot) {
        ++it;
    }
    rows_.insert(it, Row{std::move(w), pivot});
    return true;
}

bool IntegerSpan::contains(const std::vector<Rational>& v) const {
    for (const auto& x : reduce(v)) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors, std::size_t dimension) {
    IncrementalSpan span(dimension);
    for (const auto& v : vectors) {
        span.insert(v);
    }
    return span.rank();
}

}  // namespace orbiroot::detail
