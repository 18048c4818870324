#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbiroot/rational.hpp"

namespace orbiroot::detail {

/// Span of vectors inserted one at a time, kept in echelon form over Q.
/// Each stored row remembers how it combines the inserted vectors, so a
/// dependent insertion reports its coefficients.
class IncrementalSpan {
public:
    /// With `track_combinations` false, insert() only reports dependence
    /// (an empty vector) and skips the bookkeeping.
    explicit IncrementalSpan(std::size_t dimension, bool track_combinations = true)
        : dimension_(dimension), track_(track_combinations) {}

    /// Adds v. Returns std::nullopt if v was independent of the previous
    /// insertions; otherwise the coefficients c with v = sum_k c_k v_k over
    /// the previously inserted *independent* vectors, in insertion order.
    std::optional<std::vector<Rational>> insert(std::vector<Rational> v);

    /// Same test without modifying the span.
    bool contains(std::vector<Rational> v) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }

private:
    struct Row {
        std::vector<Rational> values;
        std::size_t pivot;
        std::vector<Rational> combination;
    };

    std::size_t dimension_;
    bool track_;
    std::vector<Row> rows_;
};

/// Rank and membership only, over Q, computed fraction-free: inputs are
/// scaled to integer vectors and rows are kept primitive.
class IntegerSpan {
public:
    explicit IntegerSpan(std::size_t dimension) : dimension_(dimension) {}

    /// Adds v; returns true if it was independent.
    bool insert(const std::vector<Rational>& v);
    bool contains(const std::vector<Rational>& v) const;

    std::size_t rank() const noexcept { return rows_.size(); }

private:
    struct Row {
        std::vector<BigInt> values;
        std::size_t pivot;
    };

    std::vector<BigInt> reduce(const std::vector<Rational>& v) const;

    std::size_t dimension_;
    std::vector<Row> rows_;
};

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors, std::size_t dimension);

}  // namespace orbiroot::detail
