#include "mrd/matrix.hpp"

#include <algorithm>

#include "mrd/error.hpp"
#include "mrd/simd/rank_gf2.hpp"

namespace mrd {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    require(a_.size() == rows_ * cols_, ErrorCode::ShapeMismatch, "entry count does not match shape");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const noexcept { return linalg::is_zero(a_); }

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::row_block(std::size_t begin, std::size_t count) const {
    require(begin + count <= rows_, ErrorCode::ShapeMismatch, "row block out of range");
    return Matrix(field_, count, cols_,
                  std::vector<Elem>(a_.begin() + begin * cols_, a_.begin() + (begin + count) * cols_));
}

Matrix Matrix::pad_rows(std::size_t total_rows) const {
    require(total_rows >= rows_, ErrorCode::ShapeMismatch, "cannot pad to fewer rows");
    std::vector<Elem> v = a_;
    v.resize(total_rows * cols_, 0);
    return Matrix(field_, total_rows, cols_, std::move(v));
}

void check_same_shape(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::ShapeMismatch, "matrix shapes differ");
    require(a.F().same_as(b.F()), ErrorCode::FieldMismatch, "matrices over different fields");
}

Matrix& Matrix::operator+=(const Matrix& o) {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = field_->add(a_[i], o.a_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = field_->sub(a_[i], o.a_[i]);
    return *this;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix out = *this;
    for (auto& x : out.a_) x = field_->mul(c, x);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::ShapeMismatch, "inner dimensions differ");
    require(a.F().same_as(b.F()), ErrorCode::FieldMismatch, "matrices over different fields");
    const Field& f = a.F();
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Elem x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
    return c;
}

std::string Matrix::text() const {
    const Field& f = *field_;
    std::string s;
    const bool compact = f.is_prime() && f.characteristic() <= 10;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!compact && i) s.push_back('.');
        s += f.element_text(a_[i]);
    }
    return s;
}

Matrix Matrix::parse(FieldPtr field, std::size_t rows, std::size_t cols, std::string_view text) {
    const Field& f = *field;
    std::vector<Elem> entries;
    const bool compact = f.is_prime() && f.characteristic() <= 10;
    if (compact) {
        for (char c : text) entries.push_back(f.parse_element(std::string_view(&c, 1)));
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find('.', start), text.size());
            entries.push_back(f.parse_element(text.substr(start, end - start)));
            start = end + 1;
        }
    }
    require(entries.size() == rows * cols, ErrorCode::ParseError,
            "matrix line has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(rows * cols));
    return Matrix(std::move(field), rows, cols, std::move(entries));
}

bool canonical_less(const Matrix& a, const Matrix& b) { return linalg::vec_less(a.F(), a.entries(), b.entries()); }

std::size_t MatrixHash::operator()(const Matrix& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : a.entries()) h = (h ^ x) * 1099511628211ull;
    return h;
}

bool packable_gf2(const Field& f, std::size_t rows, std::size_t cols) {
    return f.size() == 2 && std::min(rows, cols) <= simd::kMaxPackedRows &&
           (cols <= simd::kMaxPackedCols || rows <= simd::kMaxPackedCols);
}

std::size_t packed_words(std::size_t rows, std::size_t cols) { return cols <= simd::kMaxPackedCols ? rows : cols; }

void pack_gf2(const Matrix& x, std::span<std::uint32_t> out) {
    const auto& a = x.entries();
    if (x.cols() <= simd::kMaxPackedCols) {
        for (std::size_t i = 0; i < x.rows(); ++i) {
            std::uint32_t w = 0;
            for (std::size_t j = 0; j < x.cols(); ++j) w |= a[i * x.cols() + j] << j;
            out[i] = w;
        }
    } else {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            std::uint32_t w = 0;
            for (std::size_t i = 0; i < x.rows(); ++i) w |= a[i * x.cols() + j] << i;
            out[j] = w;
        }
    }
}

std::size_t mat_rank(const Matrix& x) {
    if (packable_gf2(x.F(), x.rows(), x.cols()) && packed_words(x.rows(), x.cols()) <= simd::kMaxPackedRows) {
        std::vector<std::uint32_t> w(packed_words(x.rows(), x.cols()));
        pack_gf2(x, w);
        return simd::rank_gf2(w);
    }
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < x.rows(); ++i) rows.push_back(x.row(i));
    return linalg::rank(x.F(), std::move(rows), x.cols());
}

std::size_t rank_distance(const Matrix& x, const Matrix& y) {
    check_same_shape(x, y);
    return mat_rank(y - x);
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    require(top.cols() == bottom.cols(), ErrorCode::ShapeMismatch, "stacked matrices need equal column counts");
    require(top.F().same_as(bottom.F()), ErrorCode::FieldMismatch, "stacked matrices over different fields");
    std::vector<Elem> v = top.entries();
    v.insert(v.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(v));
}

// ---------------------------------------------------------------------------------------------------------

Subspace::Subspace(FieldPtr field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::vector<Vec> vectors) {
    for (const auto& v : vectors)
        require(v.size() == ambient, ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
    Subspace s(field, ambient);
    auto e = linalg::rref(*field, std::move(vectors), ambient);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
    std::vector<Vec> id(ambient, Vec(ambient, 0));
    for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
    return span(std::move(field), ambient, std::move(id));
}

Vec Subspace::reduce(const Vec& v) const {
    require(v.size() == ambient_, ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
    return linalg::reduce(*field_, linalg::Echelon{basis_, pivots_}, v);
}

bool Subspace::contains(const Vec& v) const { return linalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& u) const {
    require(u.ambient_ == ambient_, ErrorCode::DimensionMismatch, "ambient dimensions differ");
    return std::all_of(u.basis_.begin(), u.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& o) const {
    require(o.ambient_ == ambient_, ErrorCode::DimensionMismatch, "ambient dimensions differ");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& o) const {
    require(o.ambient_ == ambient_, ErrorCode::DimensionMismatch, "ambient dimensions differ");
    // Zassenhaus: rows [u | u] and [v | 0]; echelon rows with zero left half span U n V on the right.
    const std::size_t n = ambient_;
    std::vector<Vec> rows;
    for (const auto& u : basis_) {
        Vec r(2 * n);
        std::copy(u.begin(), u.end(), r.begin());
        std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
        rows.push_back(std::move(r));
    }
    for (const auto& v : o.basis_) {
        Vec r(2 * n, 0);
        std::copy(v.begin(), v.end(), r.begin());
        rows.push_back(std::move(r));
    }
    const auto e = linalg::rref(*field_, std::move(rows), 2 * n);
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        if (e.pivots[i] >= n) inter.emplace_back(e.rows[i].begin() + static_cast<std::ptrdiff_t>(n), e.rows[i].end());
    return span(field_, n, std::move(inter));
}

std::vector<Vec> Subspace::complete_basis(const Subspace& outer) const {
    require(outer.contains(*this), ErrorCode::NotASubspace, "subspace is not contained in the target");
    std::vector<Vec> extra;
    Subspace running = *this;
    for (const auto& cand : outer.basis_) {
        if (running.dim() == outer.dim()) break;
        if (running.contains(cand)) continue;
        extra.push_back(cand);
        std::vector<Vec> b = running.basis_;
        b.push_back(cand);
        running = span(field_, ambient_, std::move(b));
    }
    return extra;
}

std::vector<Vec> Subspace::coset_reps(const Subspace& outer) const {
    std::vector<Vec> out;
    for_each_combination(*field_, complete_basis(outer), ambient_, [&](const Vec& v) { out.push_back(v); });
    return out;
}

std::vector<Vec> Subspace::elements() const {
    std::vector<Vec> out;
    for_each_combination(*field_, basis_, ambient_, [&](const Vec& v) { out.push_back(v); });
    return out;
}

void for_each_combination(const Field& f, const std::vector<Vec>& gens, std::size_t width,
                          const std::function<void(const Vec&)>& fn) {
    const std::size_t k = gens.size();
    const Elem q = f.size();
    std::vector<Elem> coeff(k, 0);
    Vec v(width, 0);
    while (true) {
        fn(v);
        std::size_t i = k;
        while (i > 0) {
            --i;
            const Elem old = coeff[i];
            const Elem next = old + 1 == q ? 0 : old + 1;
            coeff[i] = next;
            linalg::axpy(f, f.sub(next, old), gens[i], v);
            if (next != 0) break;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

} // namespace mrd

namespace mrd {

std::vector<Subspace> all_subspaces(const FieldPtr& field, std::size_t ambient, std::size_t k) {
    require(k <= ambient, ErrorCode::DimensionMismatch, "subspace dimension exceeds ambient dimension");
    const Elem q = field->size();
    std::vector<Subspace> out;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // Free slots: row i, column c > piv[i] with c not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = piv[i] + 1; c < ambient; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(i, c);
        std::vector<Elem> val(slots.size(), 0);
        while (true) {
            std::vector<Vec> rows(k, Vec(ambient, 0));
            for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = val[s];
            out.push_back(Subspace::span(field, ambient, std::move(rows)));
            std::size_t s = slots.size();
            while (s > 0 && val[s - 1] + 1 == q) val[--s] = 0;
            if (s == 0) break;
            ++val[s - 1];
        }
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == ambient - k + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t N, std::size_t k) {
    if (k > N) return 0;
    // Row recurrence [N,k] = [N-1,k-1] + q^k [N-1,k], in 128-bit with saturation.
    using U = unsigned __int128;
    const U cap = ~std::uint64_t{0};
    std::vector<U> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t j = std::min(n, k); j >= 1; --j) {
            U qj = 1;
            for (std::size_t t = 0; t < j && qj < cap; ++t) qj *= q;
            qj = std::min(qj, cap);
            const U prod = row[j] != 0 && qj > cap / row[j] ? cap : qj * row[j];
            row[j] = std::min(row[j - 1] + prod, cap);
        }
    return static_cast<std::uint64_t>(row[k]);
}

} // namespace mrd
