#include "mrd/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mrd/error.hpp"
#include "mrd/linalg.hpp"

namespace mrd {

namespace {

Vec vectorize(const Matrix& x) { return x.entries(); }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::size_t affine_rank_of(const std::vector<Matrix>& words, std::size_t base_index) {
    require(!words.empty(), ErrorCode::Empty, "affine rank of an empty code");
    require(base_index < words.size(), ErrorCode::ParamOutOfRange, "base codeword index out of range");
    const Field& f = words.front().F();
    const std::size_t width = words.front().rows() * words.front().cols();
    std::vector<Vec> diffs;
    diffs.reserve(words.size());
    for (const auto& w : words) diffs.push_back(vectorize(w - words[base_index]));
    return linalg::rank(f, std::move(diffs), width);
}

// w * X for a row vector w of length X.rows().
Vec row_times(const Field& f, const Vec& w, const Matrix& x) {
    Vec out(x.cols(), 0);
    for (std::size_t r = 0; r < x.rows(); ++r) {
        if (w[r] == 0) continue;
        for (std::size_t c = 0; c < x.cols(); ++c) out[c] = f.add(out[c], f.mul(w[r], x(r, c)));
    }
    return out;
}

Matrix rows_matrix(const FieldPtr& field, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

BigInt big_pow(BigInt b, BigInt e) {
    BigInt r = 1;
    while (e > 0) {
        if ((e & 1) != 0) r *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return r;
}

unsigned bit_length(const BigInt& x) { return x == 0 ? 0u : static_cast<unsigned>(msb(x)) + 1; }

PowerValue power_value(BigInt base, BigInt exponent) {
    PowerValue v{std::move(base), std::move(exponent), std::nullopt};
    const unsigned base_bits = bit_length(v.base);
    if (v.base <= 1 || v.exponent * base_bits <= kExactBits + base_bits) {
        BigInt val = big_pow(v.base, v.exponent);
        if (bit_length(val) <= kExactBits) v.value = std::move(val);
    }
    return v;
}

// q = p^e; returns (p, e) or throws BadParameters.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
    require(q >= 2, ErrorCode::BadParameters, "q must be a prime power");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    require(r == 1, ErrorCode::BadParameters, "q must be a prime power");
    return {p, e};
}

BigInt gl_order(const BigInt& q, std::size_t m) {
    BigInt r = 1, qm = big_pow(q, m), qi = 1;
    for (std::size_t i = 0; i < m; ++i) {
        r *= qm - qi;
        qi *= q;
    }
    return r;
}

BigInt q_factorial(const BigInt& q, std::size_t m) {
    BigInt r = 1, sum = 0, qt = 1;
    for (std::size_t k = 0; k < m; ++k) {
        sum += qt;
        qt *= q;
        r *= sum;
    }
    return r;
}

} // namespace

std::size_t affine_rank(const RankCode& c, std::uint64_t cap) { return affine_rank_from(c, 0, cap); }

std::size_t affine_rank_from(const RankCode& c, std::size_t base_index, std::uint64_t cap) {
    require(c.size() > 0, ErrorCode::Empty, "affine rank of an empty code");
    if (c.is_linear() && base_index == 0) return c.dimension();
    return affine_rank_of(c.members(cap), base_index);
}

Subspace kernel(const RankCode& c, std::uint64_t work_cap) {
    require(c.size() > 0, ErrorCode::Empty, "kernel of an empty code");
    if (c.is_linear()) return c.as_subspace();
    const std::size_t width = c.m() * c.n();
    require(sat_mul(c.size(), c.size()) <= work_cap, ErrorCode::TooLarge, "kernel scan exceeds the work cap");
    const auto words = c.members(work_cap);
    const std::unordered_set<Matrix, MatrixHash> set(words.begin(), words.end());
    auto is_period = [&](const Matrix& x) {
        return std::all_of(words.begin(), words.end(), [&](const Matrix& w) { return set.count(w + x) > 0; });
    };
    const Field& f = c.F();
    std::vector<Vec> periods;
    for (const auto& w : words) {
        const Matrix x = w - words.front();
        if (x.is_zero() || !is_period(x)) continue;
        // Over a proper extension field the periods form an additive group; keep the GF(q)-closed part.
        bool closed = true;
        for (Elem lambda = 2; closed && lambda < f.size(); ++lambda) closed = is_period(x.scaled(lambda));
        if (closed) periods.push_back(vectorize(x));
    }
    return Subspace::span(c.field(), width, std::move(periods));
}

bool is_aperiodic(const RankCode& c, std::uint64_t work_cap) { return kernel(c, work_cap).dim() == 0; }

Isometry Isometry::identity(const FieldPtr& f, std::size_t m, std::size_t n) {
    return {Matrix::identity(f, m), Matrix::identity(f, n), Matrix(f, m, n), 0, false};
}

void check_isometry(const Isometry& g, std::size_t m, std::size_t n) {
    require(!g.transpose || m == n, ErrorCode::BadParameters, "transposition needs m = n");
    require(g.A.rows() == m && g.A.cols() == m, ErrorCode::ShapeMismatch, "A must be m x m");
    require(g.B.rows() == n && g.B.cols() == n, ErrorCode::ShapeMismatch, "B must be n x n");
    require(g.T.rows() == m && g.T.cols() == n, ErrorCode::ShapeMismatch, "T must be m x n");
    require(mat_rank(g.A) == m, ErrorCode::SingularA, "A is singular");
    require(mat_rank(g.B) == n, ErrorCode::SingularB, "B is singular");
}

Matrix apply_isometry(const Matrix& x, const Isometry& g) {
    Matrix y = g.transpose ? x.transpose() : x;
    if (g.phi != 0) {
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) = y.F().frobenius(y(i, j), g.phi);
    }
    return g.A * y * g.B + g.T;
}

RankCode apply_isometry(const RankCode& c, const Isometry& g, std::uint64_t cap) {
    check_isometry(g, c.m(), c.n());
    require(g.A.F().same_as(c.F()) && g.B.F().same_as(c.F()) && g.T.F().same_as(c.F()), ErrorCode::FieldMismatch,
            "isometry over a different field");
    if (c.is_linear() && g.T.is_zero()) {
        std::vector<Matrix> gens;
        for (const auto& b : c.body()) gens.push_back(apply_isometry(b, g));
        return RankCode::linear_span(c.field(), c.m(), c.n(), c.d(), gens);
    }
    std::vector<Matrix> words;
    for (const auto& x : c.members(cap)) words.push_back(apply_isometry(x, g));
    return RankCode::explicit_set(c.field(), c.m(), c.n(), c.d(), std::move(words));
}

std::optional<RowSupportedWitness> find_row_supported_mrd_subcode(const RankCode& c, std::size_t m1,
                                                                  std::uint64_t subspace_cap, std::uint64_t work_cap) {
    require(1 <= m1 && m1 <= c.m(), ErrorCode::BadRowCount, "need 1 <= m1 <= m");
    const Field& f = c.F();
    const std::size_t m = c.m(), n = c.n(), d = c.d();
    if (d > std::min(m1, n)) return std::nullopt;
    const CodeParams sub_params{f.size(), m1, n, d};
    const std::size_t want_log = mrd_log_size(sub_params);
    const std::uint64_t subspaces = gaussian_binomial(f.size(), m, m - m1);
    require(subspaces <= subspace_cap, ErrorCode::TooLarge, "too many candidate subspaces");
    if (!c.is_linear()) require(sat_mul(subspaces, c.size()) <= work_cap, ErrorCode::TooLarge, "search exceeds the work cap");

    const Subspace full = Subspace::full(c.field(), m);
    std::vector<Matrix> words;
    if (!c.is_linear()) words = c.members(work_cap);

    for (const auto& w1 : all_subspaces(c.field(), m, m - m1)) {
        const auto comp = w1.complete_basis(full);
        std::vector<Vec> prow = comp;
        prow.insert(prow.end(), w1.basis().begin(), w1.basis().end());
        const Matrix pc = rows_matrix(c.field(), comp, m);
        auto key = [&](const Matrix& x) {
            Vec k;
            for (const auto& w : w1.basis()) {
                const Vec r = row_times(f, w, x);
                k.insert(k.end(), r.begin(), r.end());
            }
            return k;
        };

        if (c.is_linear()) {
            if (c.dimension() < want_log) continue;
            std::vector<Vec> constraints;
            for (const auto& b : c.body()) constraints.push_back(key(b));
            const std::size_t cw = w1.dim() * n;
            std::vector<Vec> combos;
            if (cw == 0) {
                for (std::size_t i = 0; i < c.body().size(); ++i) {
                    Vec v(c.body().size(), 0);
                    v[i] = 1;
                    combos.push_back(std::move(v));
                }
            } else {
                combos = linalg::left_kernel(f, constraints, cw);
            }
            if (combos.size() != want_log) continue;
            std::vector<Matrix> gens;
            for (const auto& co : combos) {
                Matrix x(c.field(), m, n);
                for (std::size_t i = 0; i < co.size(); ++i)
                    if (co[i] != 0) x += c.body()[i].scaled(co[i]);
                gens.push_back(pc * x);
            }
            auto sub = RankCode::linear_span(c.field(), m1, n, d, gens);
            if (sub.dimension() == want_log && is_mrd(sub, work_cap))
                return RowSupportedWitness{w1, rows_matrix(c.field(), prow, m), Matrix(c.field(), m, n), std::move(sub)};
            continue;
        }

        // Explicit codes: {X - c0 : W1 (X - c0) = 0} groups C by the value of W1 X.
        std::map<Vec, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < words.size(); ++i) groups[key(words[i])].push_back(i);
        std::uint64_t want = 1;
        for (std::size_t i = 0; i < want_log; ++i) want = sat_mul(want, f.size());
        for (const auto& [k, idx] : groups) {
            if (idx.size() != want) continue;
            const Matrix& c0 = words[idx.front()];
            std::vector<Matrix> cut;
            for (auto i : idx) cut.push_back(pc * (words[i] - c0));
            auto sub = RankCode::explicit_set(c.field(), m1, n, d, std::move(cut));
            if (is_mrd(sub, work_cap)) return RowSupportedWitness{w1, rows_matrix(c.field(), prow, m), c0, std::move(sub)};
        }
    }
    return std::nullopt;
}

Signature signature(const RankCode& c, const Caps& caps) {
    Signature s;
    s.params = c.params();
    s.card = c.size();
    if (c.size() >= 2) s.mindist = min_rank_distance(c, caps.members);
    s.rankdist = rank_weight_distribution(c, caps.members);
    s.kernel_dim = kernel(c, caps.anticode_checks).dim();
    s.affine_rank = affine_rank(c, caps.members);
    for (std::size_t mp = c.n(); mp <= c.m(); ++mp) {
        std::optional<bool> found;
        try {
            found = find_row_supported_mrd_subcode(c, mp, std::uint64_t{1} << 16, caps.anticode_checks).has_value();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TooLarge) throw;
        }
        s.subcode_profile.emplace_back(mp, found);
    }
    return s;
}

std::size_t distinct_count(const std::vector<RankCode>& codes, std::uint64_t cap) {
    std::set<std::pair<CodeParams, std::vector<Matrix>>, decltype([](const auto& a, const auto& b) {
                 const auto ka = std::tie(a.first.q, a.first.m, a.first.n, a.first.d);
                 const auto kb = std::tie(b.first.q, b.first.m, b.first.n, b.first.d);
                 if (ka != kb) return ka < kb;
                 return std::lexicographical_compare(a.second.begin(), a.second.end(), b.second.begin(),
                                                     b.second.end(), canonical_less);
             })>
        seen;
    for (const auto& c : codes) seen.emplace(c.params(), c.members(cap));
    return seen.size();
}

std::optional<std::string> inequivalence_certificate(const Signature& a, const Signature& b) {
    if (a.params != b.params) return "params";
    if (a.card != b.card) return "card";
    if (a.mindist != b.mindist) return "mindist";
    if (a.rankdist != b.rankdist) return "rankdist";
    if (a.kernel_dim != b.kernel_dim) return "kernel_dim";
    if (a.affine_rank != b.affine_rank) return "affine_rank";
    for (const auto& [mp, fa] : a.subcode_profile) {
        for (const auto& [mq, fb] : b.subcode_profile)
            if (mp == mq && fa && fb && *fa != *fb) return "subcode_profile";
    }
    return std::nullopt;
}

AutOrder aut_order(std::uint32_t q, std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, ErrorCode::BadParameters, "need m, n >= 1");
    const auto [p, e] = prime_power(q);
    (void)p;
    const BigInt bq = q;
    const std::size_t qexp = m * (m - 1) / 2 + n * (n - 1) / 2 + m * n;
    AutOrder r;
    r.formula = q_factorial(bq, m) * q_factorial(bq, n) * big_pow(bq - 1, n + m - 1) * big_pow(bq, qexp) * e;
    r.with_transpose = r.formula * 2;
    r.square = m == n;
    return r;
}

std::string PowerValue::text() const {
    std::ostringstream os;
    os << '(' << base << ")^(" << exponent << ')';
    return os.str();
}

CountBounds count_bounds(std::uint32_t q, std::size_t m, std::size_t n, std::size_t d, std::size_t m_prime) {
    require(1 <= d && d <= n && n <= m_prime && m_prime <= m, ErrorCode::BadParameters,
            "need 1 <= d <= n <= m' <= m");
    const auto [p, e] = prime_power(q);
    (void)p;
    const BigInt bq = q;
    CountBounds b;
    b.lower = power_value(2, big_pow(bq, (n - d + 1) * (m - m_prime)));
    b.upper = power_value(big_pow(bq, (d - 1) * m), big_pow(bq, (n - d + 1) * m));
    b.divisor = gl_order(bq, m) * gl_order(bq, n) * big_pow(bq, m * n) * e;
    if (m == n) b.divisor *= 2;
    if (b.lower.value) b.inequivalent_lower = (*b.lower.value + b.divisor - 1) / b.divisor;
    return b;
}

} // namespace mrd
