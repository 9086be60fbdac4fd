#include "mrd/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "mrd/error.hpp"
#include "mrd/simd/rank_gf2.hpp"

namespace mrd {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > kSat / base) return kSat;
        r *= base;
    }
    return r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSat / a) return kSat;
    return a * b;
}

std::size_t entries_rank(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
    std::vector<Vec> r;
    r.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) r.emplace_back(v.begin() + i * cols, v.begin() + (i + 1) * cols);
    return linalg::rank(f, std::move(r), cols);
}

bool batch_gf2(const Field& f, std::size_t rows, std::size_t cols) {
    return f.size() == 2 && rows <= simd::kMaxPackedRows && cols <= simd::kMaxPackedCols;
}

void pack_rows(std::size_t rows, std::size_t cols, const Vec& v, std::uint32_t* out) {
    for (std::size_t i = 0; i < rows; ++i) {
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < cols; ++j) w |= v[i * cols + j] << j;
        out[i] = w;
    }
}

// Rank histogram of a stream of matrices; GF(2) input goes through the batched kernel.
class RankHistogram {
  public:
    RankHistogram(const Field& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), packed_(batch_gf2(f, rows, cols)), hist_(std::min(rows, cols) + 1, 0) {
        if (packed_) words_.reserve(kBatch * rows_);
    }

    void push(const Vec& v) {
        if (!packed_) {
            ++hist_[entries_rank(f_, rows_, cols_, v)];
            return;
        }
        words_.resize(words_.size() + rows_);
        pack_rows(rows_, cols_, v, words_.data() + words_.size() - rows_);
        if (words_.size() == kBatch * rows_) flush();
    }

    void push_packed(const std::uint32_t* w) {
        words_.insert(words_.end(), w, w + rows_);
        if (words_.size() == kBatch * rows_) flush();
    }

    bool packed() const noexcept { return packed_; }

    const std::vector<std::uint64_t>& finish() {
        flush();
        return hist_;
    }

  private:
    static constexpr std::size_t kBatch = 1024;

    void flush() {
        if (words_.empty()) return;
        const std::size_t count = words_.size() / rows_;
        ranks_.resize(count);
        simd::rank_gf2_batch(words_, rows_, static_cast<std::uint32_t>(cols_), ranks_);
        for (auto r : ranks_) ++hist_[r];
        words_.clear();
    }

    const Field& f_;
    std::size_t rows_, cols_;
    bool packed_;
    std::vector<std::uint64_t> hist_;
    std::vector<std::uint32_t> words_;
    std::vector<std::uint8_t> ranks_;
};

// Histogram of ranks of all q^k codewords of a linear code.
std::vector<std::uint64_t> linear_weight_histogram(const RankCode& c) {
    const Field& f = c.F();
    RankHistogram h(f, c.m(), c.n());
    const auto& basis = c.body();
    if (h.packed() && basis.size() < 64) {
        // Gray code walk: each step adds one basis matrix.
        std::vector<std::uint32_t> pb(basis.size() * c.m());
        for (std::size_t i = 0; i < basis.size(); ++i) pack_rows(c.m(), c.n(), basis[i].entries(), &pb[i * c.m()]);
        std::vector<std::uint32_t> cur(c.m(), 0);
        h.push_packed(cur.data());
        const std::uint64_t total = std::uint64_t{1} << basis.size();
        for (std::uint64_t g = 1; g < total; ++g) {
            const auto b = static_cast<std::size_t>(std::countr_zero(g));
            for (std::size_t r = 0; r < c.m(); ++r) cur[r] ^= pb[b * c.m() + r];
            h.push_packed(cur.data());
        }
        return h.finish();
    }
    std::vector<Vec> gens;
    for (const auto& b : basis) gens.push_back(b.entries());
    for_each_combination(f, gens, c.m() * c.n(), [&](const Vec& v) { h.push(v); });
    return h.finish();
}

std::vector<std::uint64_t> pairwise_histogram(const RankCode& c, std::uint64_t cap) {
    const auto words = c.members(cap);
    const Field& f = c.F();
    RankHistogram h(f, c.m(), c.n());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) h.push(linalg::sub(f, words[j].entries(), words[i].entries()));
    return h.finish();
}

void check_cap(std::uint64_t size, std::uint64_t cap, const char* what) {
    require(size <= cap, ErrorCode::TooLarge,
            std::string(what) + " needs " + (size == kSat ? std::string("more than 2^64") : std::to_string(size)) +
                " items, cap is " + std::to_string(cap));
}

} // namespace

void check_params(const CodeParams& p) {
    require(p.m >= 1 && p.n >= 1, ErrorCode::BadParameters, "m and n must be positive");
    require(p.d >= 1 && p.d <= std::min(p.m, p.n), ErrorCode::BadParameters, "need 1 <= d <= min(m, n)");
}

std::size_t mrd_log_size(const CodeParams& p) { return std::max(p.m, p.n) * (std::min(p.m, p.n) - p.d + 1); }

// ---------------------------------------------------------------------------------------------------------

RankCode::RankCode(FieldPtr field, std::size_t m, std::size_t n, std::size_t d, CodeKind kind,
                   std::vector<Matrix> body)
    : field_(std::move(field)), m_(m), n_(n), d_(d), kind_(kind), body_(std::move(body)) {
    check_params(params());
    for (const auto& x : body_) {
        require(x.rows() == m_ && x.cols() == n_, ErrorCode::ShapeMismatch, "codeword shape differs from code");
        require(x.F().same_as(*field_), ErrorCode::FieldMismatch, "codeword over a different field");
    }
}

std::vector<Matrix> to_matrices(const FieldPtr& field, std::size_t m, std::size_t n, const std::vector<Vec>& vs) {
    std::vector<Matrix> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(Matrix::from_vec(field, m, n, v));
    return out;
}

RankCode RankCode::linear(FieldPtr field, std::size_t m, std::size_t n, std::size_t d, std::vector<Matrix> basis) {
    std::vector<Vec> vs;
    for (const auto& b : basis) {
        require(b.rows() == m && b.cols() == n, ErrorCode::ShapeMismatch, "basis matrix shape differs from code");
        vs.push_back(b.entries());
    }
    const std::size_t k = vs.size();
    auto e = linalg::rref(*field, std::move(vs), m * n);
    require(e.rows.size() == k, ErrorCode::DependentBasis, "basis matrices are linearly dependent");
    return RankCode(field, m, n, d, CodeKind::linear, to_matrices(field, m, n, e.rows));
}

RankCode RankCode::linear_span(FieldPtr field, std::size_t m, std::size_t n, std::size_t d,
                               const std::vector<Matrix>& gens) {
    std::vector<Vec> vs;
    for (const auto& b : gens) {
        require(b.rows() == m && b.cols() == n, ErrorCode::ShapeMismatch, "generator shape differs from code");
        vs.push_back(b.entries());
    }
    auto e = linalg::rref(*field, std::move(vs), m * n);
    return RankCode(field, m, n, d, CodeKind::linear, to_matrices(field, m, n, e.rows));
}

RankCode RankCode::explicit_set(FieldPtr field, std::size_t m, std::size_t n, std::size_t d, std::vector<Matrix> words) {
    std::sort(words.begin(), words.end(), CanonicalLess{});
    for (std::size_t i = 1; i < words.size(); ++i)
        require(!(words[i] == words[i - 1]), ErrorCode::DuplicateCodeword, "codeword listed twice: " + words[i].text());
    return RankCode(std::move(field), m, n, d, CodeKind::explicit_set, std::move(words));
}

RankCode RankCode::with_d(std::size_t d) const {
    RankCode c = *this;
    c.d_ = d;
    check_params(c.params());
    return c;
}

std::size_t RankCode::dimension() const {
    require(is_linear(), ErrorCode::NotLinear, "dimension of a non-linear code");
    return body_.size();
}

std::uint64_t RankCode::size() const noexcept {
    return is_linear() ? sat_pow(field_->size(), body_.size()) : body_.size();
}

Subspace RankCode::as_subspace() const {
    require(is_linear(), ErrorCode::NotLinear, "subspace view of a non-linear code");
    std::vector<Vec> vs;
    for (const auto& b : body_) vs.push_back(b.entries());
    return Subspace::span(field_, m_ * n_, std::move(vs));
}

bool RankCode::contains(const Matrix& x) const {
    if (x.rows() != m_ || x.cols() != n_ || !x.F().same_as(*field_)) return false;
    if (is_linear()) return as_subspace().contains(x.entries());
    return std::binary_search(body_.begin(), body_.end(), x, CanonicalLess{});
}

std::vector<Matrix> RankCode::members(std::uint64_t cap) const {
    if (!is_linear()) return body_;
    check_cap(size(), cap, "member enumeration");
    std::vector<Vec> gens;
    for (const auto& b : body_) gens.push_back(b.entries());
    std::vector<Matrix> out;
    out.reserve(size());
    for_each_combination(*field_, gens, m_ * n_, [&](const Vec& v) { out.push_back(Matrix::from_vec(field_, m_, n_, v)); });
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool RankCode::same_code(const RankCode& o, std::uint64_t cap) const {
    if (params() != o.params() || !field_->same_as(*o.field_)) return false;
    if (is_linear() && o.is_linear()) return body_ == o.body_;
    if (size() != o.size()) return false;
    return members(cap) == o.members(cap);
}

// ---------------------------------------------------------------------------------------------------------

std::size_t min_rank_distance(const RankCode& c, std::uint64_t cap) {
    require(c.size() >= 2, ErrorCode::TooSmall, "minimum distance needs at least two codewords");
    if (!c.is_linear()) return min_rank_distance_pairwise(c, cap);
    check_cap(c.size(), cap, "distance scan");
    const auto h = linear_weight_histogram(c);
    for (std::size_t r = 1; r < h.size(); ++r)
        if (h[r]) return r;
    return 0; // unreachable: nonzero codewords have positive rank
}

std::size_t min_rank_distance_pairwise(const RankCode& c, std::uint64_t cap) {
    require(c.size() >= 2, ErrorCode::TooSmall, "minimum distance needs at least two codewords");
    check_cap(c.size(), cap, "pairwise distance scan");
    const auto h = pairwise_histogram(c, cap);
    for (std::size_t r = 0; r < h.size(); ++r)
        if (h[r]) return r;
    return 0;
}

bool has_mrd_cardinality(const RankCode& c) {
    const std::uint64_t want = sat_pow(c.F().size(), mrd_log_size(c.params()));
    return want != kSat && c.size() == want;
}

bool is_mrd(const RankCode& c, std::uint64_t cap) {
    if (!has_mrd_cardinality(c)) return false;
    return min_rank_distance(c, cap) >= c.d();
}

bool RankDistribution::integral() const {
    return std::all_of(pair_counts.begin(), pair_counts.end(), [&](std::uint64_t x) { return x % size == 0; });
}

RankDistribution rank_weight_distribution(const RankCode& c, std::uint64_t cap) {
    check_cap(c.size(), cap, "rank distribution");
    RankDistribution out;
    out.size = c.size();
    if (c.is_linear()) {
        out.pair_counts = linear_weight_histogram(c);
        for (auto& x : out.pair_counts) x *= out.size;
        return out;
    }
    out.pair_counts = pairwise_histogram(c, cap);
    for (auto& x : out.pair_counts) x *= 2;
    out.pair_counts[0] += out.size;
    return out;
}

// ---------------------------------------------------------------------------------------------------------

bool Anticode::contains(const Matrix& x) const {
    if (x.rows() != offset.rows() || x.cols() != offset.cols()) return false;
    const Matrix diff = x - offset;
    if (kind == Kind::column) {
        for (std::size_t i = 0; i < diff.rows(); ++i)
            if (!space.contains(diff.row(i))) return false;
        return true;
    }
    const Matrix t = diff.transpose();
    for (std::size_t j = 0; j < t.rows(); ++j)
        if (!space.contains(t.row(j))) return false;
    return true;
}

std::vector<Matrix> Anticode::members() const {
    const std::size_t m = offset.rows(), n = offset.cols();
    std::vector<Vec> gens;
    if (kind == Kind::column) {
        for (std::size_t i = 0; i < m; ++i)
            for (const auto& b : space.basis()) {
                Vec v(m * n, 0);
                std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(i * n));
                gens.push_back(std::move(v));
            }
    } else {
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& b : space.basis()) {
                Vec v(m * n, 0);
                for (std::size_t i = 0; i < m; ++i) v[i * n + j] = b[i];
                gens.push_back(std::move(v));
            }
    }
    std::vector<Matrix> out;
    for_each_combination(offset.F(), gens, m * n, [&](const Vec& v) {
        out.push_back(offset + Matrix::from_vec(offset.field(), m, n, v));
    });
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::uint64_t count_anticodes(std::uint32_t q, std::size_t m, std::size_t n, std::size_t diameter) {
    std::uint64_t total = 0;
    auto add = [&](std::uint64_t x) { total = x > kSat - total ? kSat : total + x; };
    if (n <= m && diameter <= n) add(sat_mul(gaussian_binomial(q, n, diameter), sat_pow(q, m * (n - diameter))));
    if (m <= n && diameter <= m && !(m == n && diameter == 0))
        add(sat_mul(gaussian_binomial(q, m, diameter), sat_pow(q, n * (m - diameter))));
    return total;
}

std::vector<Anticode> enumerate_anticodes(const FieldPtr& field, std::size_t m, std::size_t n, std::size_t diameter,
                                          std::uint64_t cap) {
    require(diameter <= std::min(m, n), ErrorCode::BadParameters, "anticode diameter exceeds min(m, n)");
    check_cap(count_anticodes(field->size(), m, n, diameter), cap, "anticode enumeration");
    std::vector<Anticode> out;
    auto emit = [&](Anticode::Kind kind, std::size_t side, std::size_t other) {
        // side: ambient of the subspace (n for column kind, m for row kind); other: the remaining dimension.
        for (auto& s : all_subspaces(field, side, diameter)) {
            std::vector<std::size_t> free;
            for (std::size_t c = 0; c < side; ++c)
                if (std::find(s.pivots().begin(), s.pivots().end(), c) == s.pivots().end()) free.push_back(c);
            std::vector<Vec> gens;
            for (std::size_t k = 0; k < other; ++k)
                for (std::size_t c : free) {
                    Vec v(m * n, 0);
                    v[kind == Anticode::Kind::column ? k * n + c : c * n + k] = 1;
                    gens.push_back(std::move(v));
                }
            for_each_combination(*field, gens, m * n, [&](const Vec& v) {
                out.push_back(Anticode{kind, Matrix::from_vec(field, m, n, v), s});
            });
        }
    };
    if (n <= m) emit(Anticode::Kind::column, n, m);
    if (m <= n && !(m == n && diameter == 0)) emit(Anticode::Kind::row, m, n);
    return out;
}

std::optional<Anticode> anticode_restrict(const Anticode& b, std::size_t m_prime) {
    const std::size_t m = b.offset.rows(), n = b.offset.cols();
    require(n <= m_prime && m_prime <= m, ErrorCode::BadRowCount, "need n <= m' <= m");
    if (m_prime == m) return b;
    // Row kind needs m <= n, so m' < m cannot occur for it here.
    for (std::size_t i = m_prime; i < m; ++i)
        if (!b.space.contains(b.offset.row(i))) return std::nullopt;
    return Anticode{b.kind, b.offset.row_block(0, m_prime), b.space};
}

AnticodeReport verify_mrd_by_anticodes(const RankCode& c, std::uint64_t cap) {
    const std::uint64_t count = count_anticodes(c.F().size(), c.m(), c.n(), c.d() - 1);
    check_cap(sat_mul(count, c.size()), cap, "anticode verification");
    const auto words = c.members(cap);
    const auto anticodes = enumerate_anticodes(c.field(), c.m(), c.n(), c.d() - 1, cap);
    AnticodeReport rep;
    rep.anticodes = anticodes.size();
    for (std::size_t a = 0; a < anticodes.size(); ++a) {
        std::size_t hits = 0;
        for (const auto& w : words)
            if (anticodes[a].contains(w) && ++hits > 1) break;
        if (hits != 1) {
            rep.failing_index = a;
            rep.failing_count = hits;
            return rep;
        }
    }
    rep.mrd = true;
    return rep;
}

// ---------------------------------------------------------------------------------------------------------

Subspace row_supported_space(const FieldPtr& field, std::size_t m, std::size_t n, std::size_t m_prime) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < m_prime * n; ++k) {
        Vec v(m * n, 0);
        v[k] = 1;
        vs.push_back(std::move(v));
    }
    return Subspace::span(field, m * n, std::move(vs));
}

Matrix canonical_coset_rep(const Subspace& u, const Matrix& x) {
    // Reduction clears every pivot entry and never touches earlier positions, which is the lexicographic
    // minimum over the coset since zero is the smallest entry.
    return Matrix::from_vec(x.field(), x.rows(), x.cols(), u.reduce(x.entries()));
}

CosetDecomposition coset_decomposition(const RankCode& c, std::size_t m_prime) {
    require(c.is_linear(), ErrorCode::NotLinear, "coset decomposition needs a linear code");
    require(c.n() <= m_prime && m_prime <= c.m(), ErrorCode::BadRowCount, "need n <= m' <= m");
    const Subspace cs = c.as_subspace();
    const Subspace sub = cs.intersect(row_supported_space(c.field(), c.m(), c.n(), m_prime));
    auto sub_mats = to_matrices(c.field(), c.m(), c.n(), sub.basis());
    std::vector<Matrix> restricted;
    for (const auto& x : sub_mats) restricted.push_back(x.row_block(0, m_prime));
    const auto comp = sub.complete_basis(cs);
    check_cap(sat_pow(c.F().size(), comp.size()), Caps{}.members, "coset enumeration");
    std::vector<Matrix> reps;
    for_each_combination(c.F(), comp, c.m() * c.n(), [&](const Vec& v) {
        reps.push_back(canonical_coset_rep(sub, Matrix::from_vec(c.field(), c.m(), c.n(), v)));
    });
    std::sort(reps.begin(), reps.end(), CanonicalLess{});
    return CosetDecomposition{m_prime,
                              RankCode::linear(c.field(), c.m(), c.n(), c.d(), std::move(sub_mats)),
                              RankCode::linear(c.field(), m_prime, c.n(), c.d(), std::move(restricted)),
                              std::move(reps), sub.dim() == 0};
}

std::vector<Matrix> CosetDecomposition::coset(std::size_t i, std::uint64_t cap) const {
    std::vector<Matrix> out;
    for (const auto& s : subcode.members(cap)) out.push_back(reps.at(i) + s);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

} // namespace mrd
