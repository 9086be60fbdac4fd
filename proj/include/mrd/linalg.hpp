#pragma once

// Dense Gaussian elimination over a Field. Vectors are rows of Elem of a common width.

#include <cstddef>
#include <optional>
#include <vector>

#include "mrd/field.hpp"

namespace mrd::linalg {

using Vec = std::vector<Elem>;

struct Echelon {
    std::vector<Vec> rows;             // nonzero rows, reduced, pivot entries equal to one
    std::vector<std::size_t> pivots;   // strictly increasing
};

Echelon rref(const Field& f, std::vector<Vec> rows, std::size_t width);
std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t width);

/// Reduces v against an echelon basis; zero result iff v lies in its span.
Vec reduce(const Field& f, const Echelon& e, Vec v);
bool in_span(const Field& f, const Echelon& e, const Vec& v);

/// Coefficients c with sum c_i * rows[i] == target, if any.
std::optional<Vec> solve(const Field& f, const std::vector<Vec>& rows, const Vec& target, std::size_t width);

/// Basis of {c : sum c_i * rows[i] == 0}, echelon form.
std::vector<Vec> left_kernel(const Field& f, const std::vector<Vec>& rows, std::size_t width);

Vec add(const Field& f, const Vec& a, const Vec& b);
Vec sub(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, Elem c, const Vec& a);
void axpy(const Field& f, Elem c, const Vec& x, Vec& y);   // y += c * x
bool is_zero(const Vec& v);

/// Canonical order on vectors: entries compared with Field::entry_less, left to right.
bool vec_less(const Field& f, const Vec& a, const Vec& b);

} // namespace mrd::linalg
