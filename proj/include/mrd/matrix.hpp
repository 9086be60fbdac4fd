#pragma once

// The ambient space B_q(m,n): m x n matrices over GF(q), rank distance, and GF(q)-subspaces of GF(q)^N.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrd/field.hpp"
#include "mrd/linalg.hpp"

namespace mrd {

using linalg::Vec;

class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    static Matrix identity(FieldPtr field, std::size_t n);
    /// Reshapes a row-major vector.
    static Matrix from_vec(FieldPtr field, std::size_t rows, std::size_t cols, const Vec& v) {
        return Matrix(std::move(field), rows, cols, v);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }
    const Field& F() const noexcept { return *field_; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    /// Row-major entries; also the vectorization used for code subspaces.
    const std::vector<Elem>& entries() const noexcept { return a_; }
    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

    bool is_zero() const noexcept;
    Matrix transpose() const;
    /// Rows [begin, begin + count).
    Matrix row_block(std::size_t begin, std::size_t count) const;
    /// Embeds into `total_rows` rows, this matrix on top and zeros below.
    Matrix pad_rows(std::size_t total_rows) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix scaled(Elem c) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    /// Row-major entries in the text form of the base field, see docs/formats.md.
    std::string text() const;
    static Matrix parse(FieldPtr field, std::size_t rows, std::size_t cols, std::string_view text);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && a.field_->same_as(*b.field_);
    }

  private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> a_;
};

/// Canonical codeword order: row-major entries compared as their serialized coordinate tuples.
bool canonical_less(const Matrix& a, const Matrix& b);
struct CanonicalLess {
    bool operator()(const Matrix& a, const Matrix& b) const { return canonical_less(a, b); }
};
struct MatrixHash {
    std::size_t operator()(const Matrix& a) const noexcept;
};

void check_same_shape(const Matrix& a, const Matrix& b);

std::size_t mat_rank(const Matrix& x);
std::size_t rank_distance(const Matrix& x, const Matrix& y);
/// [top; bottom]
Matrix stack(const Matrix& top, const Matrix& bottom);

/// True when q = 2 and one side is at most 32, i.e. the packed kernels apply.
bool packable_gf2(const Field& f, std::size_t rows, std::size_t cols);
/// Packs into min-side words: rows as bit masks when cols <= 32, otherwise columns.
void pack_gf2(const Matrix& x, std::span<std::uint32_t> out);
std::size_t packed_words(std::size_t rows, std::size_t cols);

/// Canonical (reduced echelon) GF(q)-subspace of GF(q)^N.
class Subspace {
  public:
    Subspace(FieldPtr field, std::size_t ambient);
    static Subspace span(FieldPtr field, std::size_t ambient, std::vector<Vec> vectors);
    static Subspace full(FieldPtr field, std::size_t ambient);

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& u) const;
    Vec reduce(const Vec& v) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Vectors extending this subspace's basis to one of `outer` (pivot-greedy over outer's echelon basis,
    /// which is the standard basis when outer is the whole space). Throws NotASubspace unless this <= outer.
    std::vector<Vec> complete_basis(const Subspace& outer) const;
    /// Representatives of outer / this, q^{dim outer - dim this} of them, in odometer order.
    std::vector<Vec> coset_reps(const Subspace& outer) const;
    /// All q^dim members, odometer order over the echelon basis.
    std::vector<Vec> elements() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    FieldPtr field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Every k-dimensional subspace of GF(q)^N, enumerated by pivot set (lexicographic) and then by the free
/// entries in odometer order.
std::vector<Subspace> all_subspaces(const FieldPtr& field, std::size_t ambient, std::size_t k);
/// Number of k-dimensional subspaces of GF(q)^N, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t N, std::size_t k);

/// Calls fn(v) for every GF(q)-combination of the given vectors (q^k calls, coefficients in odometer order,
/// last vector fastest).
void for_each_combination(const Field& f, const std::vector<Vec>& gens, std::size_t width,
                          const std::function<void(const Vec&)>& fn);

} // namespace mrd
