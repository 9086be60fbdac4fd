#pragma once

// Invariants of rank-metric codes: affine rank, kernel (periods), isometries, signatures, row-supported
// MRD subcodes, and the counting formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mrd/code.hpp"

namespace mrd {

using BigInt = boost::multiprecision::cpp_int;

/// dim span{c - c0 : c in C}. Throws Empty.
std::size_t affine_rank(const RankCode& c, std::uint64_t cap = Caps{}.members);
/// Same with the base codeword chosen by index in canonical order.
std::size_t affine_rank_from(const RankCode& c, std::size_t base_index, std::uint64_t cap = Caps{}.members);

/// {x : C + x = C} as a subspace of GF(q)^{mn}. A period x gives c0 + x in C, so only the differences
/// c - c0 are tested. Throws Empty, TooLarge (|C|^2 beyond `work_cap`).
Subspace kernel(const RankCode& c, std::uint64_t work_cap = Caps{}.anticode_checks);
bool is_aperiodic(const RankCode& c, std::uint64_t work_cap = Caps{}.anticode_checks);

/// X -> A phi(X') B + T, X' = X^T when `transpose` (m = n only), phi = entrywise x -> x^{p^phi}.
struct Isometry {
    Matrix A;
    Matrix B;
    Matrix T;
    std::uint32_t phi = 0;
    bool transpose = false;

    static Isometry identity(const FieldPtr& f, std::size_t m, std::size_t n);
};
/// Throws SingularA, SingularB, ShapeMismatch, BadParameters (transpose with m != n).
void check_isometry(const Isometry& g, std::size_t m, std::size_t n);
Matrix apply_isometry(const Matrix& x, const Isometry& g);
RankCode apply_isometry(const RankCode& c, const Isometry& g, std::uint64_t cap = Caps{}.members);

struct RowSupportedWitness {
    Subspace w1;           // (m - m1)-dimensional subspace of the row space GF(q)^m
    Matrix basis_change;   // m x m, rows: complement of w1, then the w1 basis
    Matrix offset;         // codeword subtracted first (zero for linear codes)
    RankCode subcode;      // in B_q(m1, n)
};
/// Searches every (m - m1)-dimensional W1 for codewords X (after subtracting some c0 in C for non-linear
/// codes) with W1 X = 0 whose first m1 rows after the basis change form an MRD code of distance d.
/// Throws TooLarge when the subspace count exceeds `subspace_cap` or the work exceeds `work_cap`,
/// BadRowCount unless 1 <= m1 <= m.
std::optional<RowSupportedWitness> find_row_supported_mrd_subcode(const RankCode& c, std::size_t m1,
                                                                  std::uint64_t subspace_cap = std::uint64_t{1} << 16,
                                                                  std::uint64_t work_cap = Caps{}.anticode_checks);

struct Signature {
    CodeParams params;
    std::uint64_t card = 0;
    std::optional<std::size_t> mindist; // none for |C| < 2
    RankDistribution rankdist;
    std::size_t kernel_dim = 0;
    std::size_t affine_rank = 0;
    /// m' = n..m; none when the search exceeds the caps.
    std::vector<std::pair<std::size_t, std::optional<bool>>> subcode_profile;

    friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const RankCode& c, const Caps& caps = Caps{});
/// Number of pairwise different codes (as sets).
std::size_t distinct_count(const std::vector<RankCode>& codes, std::uint64_t cap = Caps{}.members);
/// First differing field name ("params", "card", "mindist", "rankdist", "kernel_dim", "affine_rank",
/// "subcode_profile"), or none. Profile entries that were not computed are not compared.
std::optional<std::string> inequivalence_certificate(const Signature& a, const Signature& b);

struct AutOrder {
    BigInt formula;          // [m]_q! [n]_q! (q-1)^{n+m-1} q^{C(m,2)+C(n,2)+mn} log_p q
    BigInt with_transpose;   // twice the formula value
    bool square = false;     // m = n: the formula omits transposition
};
/// Throws BadParameters unless q is a prime power and m, n >= 1.
AutOrder aut_order(std::uint32_t q, std::size_t m, std::size_t n);

/// base^exponent, with the value when it has at most `kExactBits` bits.
struct PowerValue {
    BigInt base;
    BigInt exponent;
    std::optional<BigInt> value;
    std::string text() const;
};
inline constexpr unsigned kExactBits = 1024;

struct CountBounds {
    PowerValue lower;  // 2^{q^{(n-d+1)(m-m')}}
    PowerValue upper;  // (q^{(d-1)m})^{q^{(n-d+1)m}}
    /// |GL(m)| |GL(n)| q^{mn} log_p q, doubled when m = n.
    BigInt divisor;
    /// ceil(lower / divisor) when lower is exact.
    std::optional<BigInt> inequivalent_lower;
};
/// Throws BadParameters unless 1 <= d <= n <= m' <= m.
CountBounds count_bounds(std::uint32_t q, std::size_t m, std::size_t n, std::size_t d, std::size_t m_prime);

} // namespace mrd
