#include "mrd/field.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

#include "mrd/error.hpp"
#include "mrd/linalg.hpp"

namespace mrd {

namespace {

using Poly = std::vector<std::uint32_t>; // low to high over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial g.
Poly poly_mod(Poly a, const Poly& g, std::uint32_t p) {
    trim(a);
    const std::size_t dg = g.size() - 1;
    while (a.size() > dg) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = lead * g[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
    std::uint64_t r = 1;
    while (k--) r *= b;
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
    const std::size_t deg = monic.size() - 1;
    if (deg <= 1) return deg == 1;
    Poly f(monic.begin(), monic.end());
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(k));
        Poly g(k + 1, 0);
        g[k] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus) {
    require(is_prime_number(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(e >= 1, ErrorCode::DegreeMismatch, "degree must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        size *= p;
        require(size <= kMaxFieldSize, ErrorCode::FieldTooLarge, "field size exceeds 2^20");
    }
    if (modulus) {
        auto& f = *modulus;
        require(f.size() == e + 1, ErrorCode::DegreeMismatch, "modulus degree does not match e");
        require(f.back() == 1, ErrorCode::DegreeMismatch, "modulus must be monic");
        for (auto c : f) require(c < p, ErrorCode::DegreeMismatch, "modulus coefficient out of range");
        require(is_irreducible(p, f), ErrorCode::ReducibleModulus, "modulus is reducible");
        return FieldPtr(new Field(p, e, std::move(f)));
    }
    // Lexicographic low-degree-first: c0 is the most significant position of the counter.
    std::vector<std::uint32_t> f(e + 1, 0);
    f[e] = 1;
    const std::uint64_t count = size;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t i = e; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(p, f)) return FieldPtr(new Field(p, e, f));
    }
    fail(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), size_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus)) {
    const std::uint32_t q = size_;
    const Poly f(modulus_.begin(), modulus_.end());

    auto to_poly = [&](Elem x) {
        Poly a(e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
            a[i] = x % p_;
            x /= p_;
        }
        return a;
    };
    auto from_poly = [&](const Poly& a) {
        Elem x = 0;
        for (std::size_t i = a.size(); i-- > 0;) x = x * p_ + a[i];
        return x;
    };
    auto mul_slow = [&](Elem a, Elem b) {
        const Poly pa = to_poly(a), pb = to_poly(b);
        Poly prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
        return from_poly(poly_mod(prod, f, p_));
    };
    auto pow_slow = [&](Elem a, std::uint64_t k) {
        Elem r = 1;
        while (k) {
            if (k & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            k >>= 1;
        }
        return r;
    };
    auto add_slow = [&](Elem a, Elem b) {
        Poly pa = to_poly(a), pb = to_poly(b);
        for (std::uint32_t i = 0; i < e_; ++i) pa[i] = (pa[i] + pb[i]) % p_;
        return from_poly(pa);
    };

    const std::uint64_t order = q - 1;
    const auto factors = prime_factors(order);
    auto is_primitive = [&](Elem g) {
        if (g == 0) return false;
        for (auto r : factors)
            if (pow_slow(g, order / r) == 1) return false;
        return true;
    };
    if (q == 2) {
        primitive_ = 1;
    } else if (e_ > 1 && is_primitive(p_)) {
        primitive_ = p_;
    } else {
        for (Elem g = 2; g < q; ++g) {
            if (is_primitive(g)) {
                primitive_ = g;
                break;
            }
        }
    }

    exp_.assign(2 * order, 0);
    log_.assign(q, 0);
    Elem x = 1;
    const bool generator_is_t = e_ > 1 && primitive_ == p_;
    for (std::uint64_t k = 0; k < order; ++k) {
        exp_[k] = x;
        exp_[k + order] = x;
        log_[x] = static_cast<std::uint32_t>(k);
        if (generator_is_t) {
            // Multiply by t: shift coordinates and fold t^e = -sum f_i t^i.
            Poly a = to_poly(x);
            const std::uint32_t top = a[e_ - 1];
            for (std::uint32_t i = e_; i-- > 1;) a[i] = a[i - 1];
            a[0] = 0;
            for (std::uint32_t i = 0; i < e_; ++i)
                a[i] = static_cast<std::uint32_t>((a[i] + std::uint64_t{p_ - f[i]} % p_ * top) % p_);
            x = from_poly(a);
        } else {
            x = mul_slow(x, primitive_);
        }
    }

    if (p_ != 2) {
        zech_.assign(order, -1);
        for (std::uint64_t k = 0; k < order; ++k) {
            const Elem s = add_slow(1, exp_[k]);
            zech_[k] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
        }
    }
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t order = size_ - 1;
    const std::uint32_t la = log_[a];
    const std::uint32_t d = (log_[b] + order - la) % order;
    const std::int64_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
}

Elem Field::neg(Elem a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    return exp_[log_[a] + (size_ - 1) / 2];
}

Elem Field::inv(Elem a) const {
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
}

Elem Field::div(Elem a, Elem b) const {
    require(b != 0, ErrorCode::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = size_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (k % order)) % order];
}

Elem Field::frobenius(Elem x, std::uint64_t k) const noexcept {
    if (x == 0 || x == 1) return x;
    k %= e_;
    const std::uint64_t order = size_ - 1;
    std::uint64_t pk = 1;
    for (std::uint64_t i = 0; i < k; ++i) pk = pk * p_ % order;
    return exp_[(std::uint64_t{log_[x]} * pk) % order];
}

Elem Field::times(std::uint64_t c, Elem a) const noexcept { return mul(static_cast<Elem>(c % p_), a); }

std::uint32_t Field::digit(Elem x, std::uint32_t i) const noexcept {
    if (p_ == 2) return (x >> i) & 1u;
    for (std::uint32_t k = 0; k < i; ++k) x /= p_;
    return x % p_;
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
    Elem x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
    return x;
}

bool Field::entry_less(Elem a, Elem b) const noexcept {
    if (e_ == 1) return a < b;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= p_;
        b /= p_;
    }
    return false;
}

std::string Field::element_text(Elem x) const {
    std::string s;
    const auto d = digits(x);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (p_ <= 10) {
            s.push_back(static_cast<char>('0' + d[i]));
        } else {
            if (i) s.push_back(':');
            s += std::to_string(d[i]);
        }
    }
    return s;
}

Elem Field::parse_element(std::string_view text) const {
    std::vector<std::uint32_t> d;
    if (p_ <= 10) {
        for (char c : text) {
            require(c >= '0' && c <= '9', ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
            d.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(':', start), text.size());
            std::uint32_t v = 0;
            const auto sub = text.substr(start, end - start);
            const auto res = std::from_chars(sub.data(), sub.data() + sub.size(), v);
            require(res.ec == std::errc{} && res.ptr == sub.data() + sub.size(), ErrorCode::ParseError,
                    "bad field element '" + std::string(text) + "'");
            d.push_back(v);
            start = end + 1;
        }
    }
    require(d.size() == e_, ErrorCode::ParseError, "field element '" + std::string(text) + "' has wrong length");
    for (auto v : d) require(v < p_, ErrorCode::ParseError, "digit out of range in '" + std::string(text) + "'");
    return from_digits(d);
}

std::string Field::descriptor() const {
    std::ostringstream os;
    os << "GF(" << p_ << '^' << e_ << ';';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : " ") << modulus_[i];
    os << ')';
    return os.str();
}

FieldPtr parse_field_descriptor(std::string_view text) {
    static const std::regex re(R"(\s*GF\(\s*(\d+)\s*\^\s*(\d+)\s*;\s*([0-9,\s]+)\)\s*)");
    std::cmatch m;
    const std::string s(text);
    require(std::regex_match(s.c_str(), m, re), ErrorCode::ParseError, "bad field descriptor '" + s + "'");
    const auto p = static_cast<std::uint32_t>(std::stoul(m[1].str()));
    const auto e = static_cast<std::uint32_t>(std::stoul(m[2].str()));
    std::vector<std::uint32_t> coeffs;
    std::stringstream cs(m[3].str());
    std::string tok;
    while (std::getline(cs, tok, ',')) coeffs.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return Field::make(p, e, coeffs);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    require(value_ < field_->size(), ErrorCode::FieldMismatch, "element value outside field");
}

FieldElement ff_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    require(a.field()->same_as(*b.field()), ErrorCode::FieldMismatch, "operands from different fields");
    const Field& f = *a.field();
    switch (op) {
    case ArithOp::add:
        return {a.field(), f.add(a.value(), b.value())};
    case ArithOp::sub:
        return {a.field(), f.sub(a.value(), b.value())};
    case ArithOp::mul:
        return {a.field(), f.mul(a.value(), b.value())};
    case ArithOp::div:
        return {a.field(), f.div(a.value(), b.value())};
    }
    fail(ErrorCode::BadParameters, "unknown op");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return ff_arith(a, b, ArithOp::add); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return ff_arith(a, b, ArithOp::sub); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return ff_arith(a, b, ArithOp::mul); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return ff_arith(a, b, ArithOp::div); }

// ---------------------------------------------------------------------------------------------------------
// Towers

namespace {

// Evaluates a polynomial with prime-field coefficients at x in f.
Elem eval_prime_poly(const Field& f, std::span<const std::uint32_t> coeffs, Elem x) {
    Elem acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

// Elements of the subfield of order p^d inside f, in increasing value order.
std::vector<Elem> subfield_elements(const Field& f, std::uint32_t d) {
    std::vector<Elem> out{0};
    const std::uint64_t sub = ipow(f.characteristic(), d);
    const std::uint64_t step = (std::uint64_t{f.size()} - 1) / (sub - 1);
    for (std::uint64_t k = 0; k < sub - 1; ++k) out.push_back(f.exp(k * step));
    std::sort(out.begin(), out.end());
    return out;
}

// Inverts a square matrix over GF(p) (row-major).
std::vector<std::uint32_t> invert_mod_p(std::vector<std::uint32_t> a, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> inv(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    auto inv_p = [p](std::uint64_t x) {
        std::uint64_t r = 1, b = x % p, k = p - 2;
        while (k) {
            if (k & 1) r = r * b % p;
            b = b * b % p;
            k >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        require(piv < n, ErrorCode::NotABasis, "coordinate system is singular");
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(a[c * n + k], a[piv * n + k]);
            std::swap(inv[c * n + k], inv[piv * n + k]);
        }
        const std::uint64_t s = inv_p(a[c * n + c]);
        for (std::size_t k = 0; k < n; ++k) {
            a[c * n + k] = static_cast<std::uint32_t>(a[c * n + k] * s % p);
            inv[c * n + k] = static_cast<std::uint32_t>(inv[c * n + k] * s % p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r * n + c] == 0) continue;
            const std::uint64_t t = a[r * n + c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r * n + k] = static_cast<std::uint32_t>((a[r * n + k] + (p - t) * a[c * n + k]) % p);
                inv[r * n + k] = static_cast<std::uint32_t>((inv[r * n + k] + (p - t) * inv[c * n + k]) % p);
            }
        }
    }
    return inv;
}

} // namespace

TowerPtr Tower::make(FieldPtr base, std::uint32_t m, std::optional<std::vector<std::uint32_t>> ext_modulus) {
    require(m >= 1, ErrorCode::DegreeMismatch, "extension degree must be positive");
    auto ext = Field::make(base->characteristic(), base->degree() * m, std::move(ext_modulus));
    return TowerPtr(new Tower(std::move(base), std::move(ext), m));
}

Tower::Tower(FieldPtr base, FieldPtr ext, std::uint32_t m) : base_(std::move(base)), ext_(std::move(ext)), m_(m) {
    const Field& K = *base_;
    const Field& F = *ext_;
    const std::uint32_t e = K.degree();

    Elem root = 0;
    if (e > 1) {
        bool found = false;
        for (Elem x : subfield_elements(F, e)) {
            if (eval_prime_poly(F, K.modulus(), x) == 0) {
                root = x;
                found = true;
                break;
            }
        }
        require(found, ErrorCode::NotASubfield, "base modulus has no root in the extension");
    }
    embed_.resize(K.size());
    for (Elem a = 0; a < K.size(); ++a) {
        Elem acc = 0, power = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            acc = F.add(acc, F.mul(K.digit(a, i), power));
            power = F.mul(power, root);
        }
        embed_[a] = acc;
        section_.emplace(acc, a);
    }

    basis_.resize(m_);
    const Elem t = F.degree() > 1 ? F.characteristic() : 1;
    basis_[0] = 1;
    for (std::uint32_t j = 1; j < m_; ++j) basis_[j] = F.mul(basis_[j - 1], t);

    if (e > 1) {
        const std::size_t E = F.degree();
        std::vector<std::uint32_t> mat(E * E, 0);
        for (std::uint32_t j = 0; j < m_; ++j) {
            for (std::uint32_t a = 0; a < e; ++a) {
                Elem ka = 1;
                for (std::uint32_t i = 0; i < a; ++i) ka *= K.characteristic();
                const auto d = F.digits(F.mul(embed_[ka], basis_[j]));
                const std::size_t col = a + e * j;
                for (std::size_t r = 0; r < E; ++r) mat[r * E + col] = d[r];
            }
        }
        coord_inverse_ = invert_mod_p(std::move(mat), E, F.characteristic());
    }
}

std::optional<Elem> Tower::section(Elem x) const {
    auto it = section_.find(x);
    if (it == section_.end()) return std::nullopt;
    return it->second;
}

std::vector<Elem> Tower::coords(Elem x) const {
    const Field& K = *base_;
    const std::uint32_t e = K.degree();
    std::vector<Elem> out(m_);
    if (e == 1) {
        for (std::uint32_t j = 0; j < m_; ++j) out[j] = ext_->digit(x, j);
        return out;
    }
    const std::size_t E = ext_->degree();
    const std::uint32_t p = K.characteristic();
    const auto d = ext_->digits(x);
    std::vector<std::uint32_t> c(E, 0);
    for (std::size_t r = 0; r < E; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < E; ++k) acc += std::uint64_t{coord_inverse_[r * E + k]} * d[k];
        c[r] = static_cast<std::uint32_t>(acc % p);
    }
    for (std::uint32_t j = 0; j < m_; ++j) out[j] = K.from_digits(std::span(c).subspan(std::size_t{e} * j, e));
    return out;
}

Elem Tower::from_coords(std::span<const Elem> c) const {
    Elem acc = 0;
    for (std::size_t j = 0; j < c.size() && j < m_; ++j) acc = ext_->add(acc, ext_->mul(embed_[c[j]], basis_[j]));
    return acc;
}

Elem Tower::frobenius(Elem x, std::int64_t i) const noexcept {
    const std::int64_t m = m_;
    const std::int64_t r = ((i % m) + m) % m;
    return ext_->frobenius(x, static_cast<std::uint64_t>(r) * base_->degree());
}

Elem Tower::trace(Elem x, std::uint32_t s) const {
    require(s >= 1 && m_ % s == 0, ErrorCode::NotASubfield, "GF(q^s) is not a subfield");
    Elem acc = 0;
    for (std::uint32_t k = 0; k < m_ / s; ++k) acc = ext_->add(acc, frobenius(x, std::int64_t{s} * k));
    return acc;
}

Elem Tower::norm(Elem x, std::uint32_t s) const {
    require(s >= 1 && m_ % s == 0, ErrorCode::NotASubfield, "GF(q^s) is not a subfield");
    Elem acc = 1;
    for (std::uint32_t k = 0; k < m_ / s; ++k) acc = ext_->mul(acc, frobenius(x, std::int64_t{s} * k));
    return acc;
}

TowerEmbedding::TowerEmbedding(TowerPtr source, TowerPtr target) : source_(std::move(source)), target_(std::move(target)) {
    require(source_->base()->same_as(*target_->base()), ErrorCode::FieldMismatch, "towers over different base fields");
    require(target_->m() % source_->m() == 0, ErrorCode::NotASubfield, "source degree does not divide target degree");
    const Field& S = source_->F();
    const Field& T = target_->F();
    const Field& K = source_->K();

    auto image_of = [&](Elem root, Elem y) {
        Elem acc = 0, power = 1;
        for (std::uint32_t i = 0; i < S.degree(); ++i) {
            acc = T.add(acc, T.mul(S.digit(y, i), power));
            power = T.mul(power, root);
        }
        return acc;
    };

    std::optional<Elem> chosen;
    for (Elem x : subfield_elements(T, S.degree())) {
        if (S.degree() > 1 && eval_prime_poly(T, S.modulus(), x) != 0) continue;
        if (S.degree() == 1 && x != 0) continue;
        if (K.degree() > 1) {
            const Elem k1 = K.characteristic();
            if (image_of(x, source_->embed(k1)) != target_->embed(k1)) continue;
        }
        chosen = x;
        break;
    }
    require(chosen.has_value(), ErrorCode::NotASubfield, "no compatible embedding found");

    table_.resize(S.size());
    for (Elem y = 0; y < S.size(); ++y) {
        table_[y] = image_of(*chosen, y);
        section_.emplace(table_[y], y);
    }
}

Elem TowerEmbedding::section(Elem y) const {
    auto it = section_.find(y);
    require(it != section_.end(), ErrorCode::NotInImage, "element is not in the embedded subfield");
    return it->second;
}

std::vector<Elem> TowerEmbedding::image_basis() const {
    std::vector<Elem> out;
    for (std::uint32_t j = 0; j < source_->m(); ++j) out.push_back(table_[source_->basis(j)]);
    return out;
}

std::vector<Elem> trace_kernel_basis(const Tower& tower, std::uint32_t m1) {
    require(m1 >= 1 && tower.m() % m1 == 0, ErrorCode::NotASubfield, "m1 must divide m");
    std::vector<linalg::Vec> images;
    for (std::uint32_t j = 0; j < tower.m(); ++j) images.push_back(tower.coords(tower.trace(tower.basis(j), m1)));
    std::vector<Elem> out;
    for (const auto& c : linalg::left_kernel(tower.K(), images, tower.m())) out.push_back(tower.from_coords(c));
    return out;
}

std::vector<Elem> subfield_basis(const Tower& tower, std::uint32_t s) {
    require(s >= 1 && tower.m() % s == 0, ErrorCode::NotASubfield, "s must divide m");
    std::vector<linalg::Vec> fixed;
    for (Elem x = 0; x < tower.F().size(); ++x)
        if (tower.frobenius(x, s) == x) fixed.push_back(tower.coords(x));
    std::vector<Elem> out;
    for (const auto& row : linalg::rref(tower.K(), std::move(fixed), tower.m()).rows) out.push_back(tower.from_coords(row));
    return out;
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
#define MRD_CASE(x)                                                                                                \
    case ErrorCode::x:                                                                                             \
        return #x;
        MRD_CASE(NotPrime)
        MRD_CASE(ReducibleModulus)
        MRD_CASE(DegreeMismatch)
        MRD_CASE(FieldTooLarge)
        MRD_CASE(FieldMismatch)
        MRD_CASE(DivisionByZero)
        MRD_CASE(NotASubfield)
        MRD_CASE(NotInImage)
        MRD_CASE(ShapeMismatch)
        MRD_CASE(DimensionMismatch)
        MRD_CASE(NotASubspace)
        MRD_CASE(ImageNotContained)
        MRD_CASE(NotABasis)
        MRD_CASE(NotDivisible)
        MRD_CASE(DependentBasis)
        MRD_CASE(DuplicateCodeword)
        MRD_CASE(TooSmall)
        MRD_CASE(TooLarge)
        MRD_CASE(BadRowCount)
        MRD_CASE(NotLinear)
        MRD_CASE(BadParameters)
        MRD_CASE(BadTower)
        MRD_CASE(BadSubspaceChain)
        MRD_CASE(EtaConditionViolated)
        MRD_CASE(P1Violated)
        MRD_CASE(P2Violated)
        MRD_CASE(DependentGenerators)
        MRD_CASE(ParamMismatch)
        MRD_CASE(NotMRDInput)
        MRD_CASE(FamilyIncomplete)
        MRD_CASE(SubcodeNotMRD)
        MRD_CASE(ReplacementNotMRD)
        MRD_CASE(TargetOutOfRange)
        MRD_CASE(ParamOutOfRange)
        MRD_CASE(NotEnoughCosets)
        MRD_CASE(SingularA)
        MRD_CASE(SingularB)
        MRD_CASE(Empty)
        MRD_CASE(ParseError)
#undef MRD_CASE
    }
    return "Unknown";
}

} // namespace mrd
