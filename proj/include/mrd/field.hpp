#pragma once

// Finite fields GF(p^e) with an explicit modulus, and towers GF(q) <= GF(q^s) <= GF(q^m).
//
// Elements are plain integers: the value of an element is sum c_i p^i where c_0..c_{e-1} are its
// coordinates in the polynomial basis 1, t, ..., t^{e-1}. Zero is 0 and one is 1. Multiplication goes
// through discrete log tables, which is why the field size is capped.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mrd {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
  public:
    /// Builds GF(p^e). Without a modulus, the lexicographically smallest monic irreducible of degree e
    /// is used, comparing coefficient sequences low degree first.
    static FieldPtr make(std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return size_; }
    bool is_prime() const noexcept { return e_ == 1; }
    /// Monic modulus, coefficients low to high (length e + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t k) const noexcept;
    /// x^(p^k); k is reduced mod e.
    Elem frobenius(Elem x, std::uint64_t k) const noexcept;
    /// Scales by the prime-field integer c (c mod p).
    Elem times(std::uint64_t c, Elem a) const noexcept;

    Elem primitive() const noexcept { return primitive_; }
    std::uint32_t log(Elem a) const noexcept { return log_[a]; }
    Elem exp(std::uint64_t k) const noexcept { return exp_[k % (size_ - 1)]; }

    std::uint32_t digit(Elem x, std::uint32_t i) const noexcept;
    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;

    /// Coordinate tuple low to high: "11" is t + 1 in GF(4). For p > 10 the coordinates are decimal
    /// and joined by ':'.
    std::string element_text(Elem x) const;
    Elem parse_element(std::string_view text) const;
    /// "GF(p^e; c0,c1,...,ce)"
    std::string descriptor() const;

    /// Canonical order of entries: coordinate tuples compared low coordinate first.
    bool entry_less(Elem a, Elem b) const noexcept;

    bool same_as(const Field& other) const noexcept {
        return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
    }

  private:
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t size_;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_ = 1;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::int64_t> zech_; // log(1 + g^k), -1 when 1 + g^k = 0; odd p only
};

bool is_prime_number(std::uint64_t n);
/// Trial factorization over GF(p): true iff the monic polynomial has no factor of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_low_to_high);
/// Parses "GF(p^e; c0,...,ce)" and builds the field.
FieldPtr parse_field_descriptor(std::string_view text);

/// Field element with its field attached; arithmetic checks that both operands share a field.
class FieldElement {
  public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    std::string text() const { return field_->element_text(value_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->same_as(*b.field_) && a.value_ == b.value_;
    }

  private:
    FieldPtr field_;
    Elem value_;
};

enum class ArithOp { add, sub, mul, div };

FieldElement ff_arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// GF(q^m) viewed as an m-dimensional space over GF(q). The GF(q)-basis is 1, t, ..., t^{m-1} where t
/// is the polynomial-basis generator of GF(q^m); this is a basis because t generates GF(q^m) over
/// GF(p). GF(q) sits inside GF(q^m) through the smallest root of its own modulus.
class Tower {
  public:
    static TowerPtr make(FieldPtr base, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> ext_modulus = std::nullopt);
    static TowerPtr make(std::uint32_t p, std::uint32_t e, std::uint32_t m) {
        return make(Field::make(p, e), m);
    }

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& ext() const noexcept { return ext_; }
    const Field& F() const noexcept { return *ext_; }
    const Field& K() const noexcept { return *base_; }
    std::uint32_t q() const noexcept { return base_->size(); }
    std::uint32_t m() const noexcept { return m_; }

    Elem embed(Elem a) const noexcept { return embed_[a]; }
    std::optional<Elem> section(Elem x) const;
    bool in_base(Elem x) const { return section(x).has_value(); }

    /// GF(q)-coordinates of x in the basis t^j (entries are base-field elements).
    std::vector<Elem> coords(Elem x) const;
    Elem from_coords(std::span<const Elem> c) const;
    Elem basis(std::uint32_t j) const noexcept { return basis_[j]; }
    /// a * x for a in GF(q).
    Elem scale(Elem a, Elem x) const noexcept { return ext_->mul(embed_[a], x); }

    /// x^(q^i), i taken mod m (negative allowed).
    Elem frobenius(Elem x, std::int64_t i) const noexcept;
    /// Relative trace / norm down to the subfield GF(q^s), s | m. The result is an element of GF(q^m).
    Elem trace(Elem x, std::uint32_t s) const;
    Elem norm(Elem x, std::uint32_t s) const;

    bool same_as(const Tower& o) const noexcept {
        return this == &o || (m_ == o.m_ && base_->same_as(*o.base_) && ext_->same_as(*o.ext_));
    }

  private:
    Tower(FieldPtr base, FieldPtr ext, std::uint32_t m);

    FieldPtr base_;
    FieldPtr ext_;
    std::uint32_t m_;
    std::vector<Elem> embed_;
    std::unordered_map<Elem, Elem> section_;
    std::vector<Elem> basis_;
    // GF(p)-inverse of the matrix whose columns are the digits of embed(k_a) * t^j, used by coords().
    std::vector<std::uint32_t> coord_inverse_;
};

/// Ring embedding GF(q^s) -> GF(q^m) for s | m that agrees with both towers' copies of GF(q).
class TowerEmbedding {
  public:
    TowerEmbedding(TowerPtr source, TowerPtr target);

    const TowerPtr& source() const noexcept { return source_; }
    const TowerPtr& target() const noexcept { return target_; }

    Elem embed(Elem x) const noexcept { return table_[x]; }
    bool in_image(Elem y) const { return section_.count(y) != 0; }
    /// Inverse on the image; throws NotInImage elsewhere.
    Elem section(Elem y) const;
    /// Images of the source's GF(q)-basis t_s^0..t_s^{s-1}.
    std::vector<Elem> image_basis() const;
    /// All images in source enumeration order.
    const std::vector<Elem>& image() const noexcept { return table_; }

  private:
    TowerPtr source_;
    TowerPtr target_;
    std::vector<Elem> table_;
    std::unordered_map<Elem, Elem> section_;
};

/// GF(q)-basis of ker Tr_{q^m/q^{m1}}, in row-reduced echelon order of the coordinate vectors.
std::vector<Elem> trace_kernel_basis(const Tower& tower, std::uint32_t m1);
/// GF(q)-basis of the subfield GF(q^s) (fixed field of x -> x^{q^s}), reduced echelon order.
std::vector<Elem> subfield_basis(const Tower& tower, std::uint32_t s);

} // namespace mrd
