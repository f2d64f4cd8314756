#pragma once

#include "superkoszul/rational.hpp"

#include <optional>
#include <vector>

namespace superkoszul::linalg {

using Vec = std::vector<Rational>;
/// Dense row-major matrix; an empty matrix may still carry a column count.
struct Mat {
    std::size_t cols = 0;
    std::vector<Vec> rows;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : cols(c), rows(r, Vec(c)) {}

    std::size_t row_count() const { return rows.size(); }
    Vec& operator[](std::size_t i) { return rows[i]; }
    const Vec& operator[](std::size_t i) const { return rows[i]; }
    void push_row(Vec v) { rows.push_back(std::move(v)); }
};

/// Rank by fraction-free elimination on primitive integer rows.
std::size_t rank(const Mat& m);

/// Rank of the rows of `a` stacked over the rows of `b`.
std::size_t stacked_rank(const Mat& a, const Mat& b);

Mat transpose(const Mat& m);
Mat multiply(const Mat& a, const Mat& b);
bool is_zero(const Mat& m);

/// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Mat& m);

/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Whether v lies in the row span of `rows`.
bool in_row_span(const Mat& rows, const Vec& v);

}  // namespace superkoszul::linalg
