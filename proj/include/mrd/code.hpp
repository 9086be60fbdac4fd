#pragma once

// Rank-metric codes in B_q(m,n): containers, distance and MRD checks, anticodes, coset decompositions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrd/field.hpp"
#include "mrd/matrix.hpp"

namespace mrd {

/// Limits on the exhaustive procedures.
struct Caps {
    std::uint64_t members = std::uint64_t{1} << 20;         // codewords enumerated per code
    std::uint64_t anticode_checks = std::uint64_t{1} << 24; // anticodes x codewords membership tests
    std::uint64_t census = std::uint64_t{1} << 12;          // plans per census
};

struct CodeParams {
    std::uint32_t q = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t d = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Validates 1 <= d <= min(m,n); throws BadParameters.
void check_params(const CodeParams& p);
/// log_q of the MRD cardinality: max(m,n) * (min(m,n) - d + 1).
std::size_t mrd_log_size(const CodeParams& p);

enum class CodeKind { linear, explicit_set };

class RankCode {
  public:
    /// GF(q)-span of independent generators; throws DependentBasis otherwise.
    static RankCode linear(FieldPtr field, std::size_t m, std::size_t n, std::size_t d, std::vector<Matrix> basis);
    /// Span of arbitrary generators (dependencies removed).
    static RankCode linear_span(FieldPtr field, std::size_t m, std::size_t n, std::size_t d,
                                const std::vector<Matrix>& gens);
    /// Explicit set; throws DuplicateCodeword on repeats.
    static RankCode explicit_set(FieldPtr field, std::size_t m, std::size_t n, std::size_t d,
                                 std::vector<Matrix> words);

    CodeKind kind() const noexcept { return kind_; }
    bool is_linear() const noexcept { return kind_ == CodeKind::linear; }
    const FieldPtr& field() const noexcept { return field_; }
    const Field& F() const noexcept { return *field_; }
    CodeParams params() const noexcept { return {field_->size(), m_, n_, d_}; }
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    RankCode with_d(std::size_t d) const;

    /// Linear: reduced echelon basis over row-major entries. Explicit: the sorted codewords.
    const std::vector<Matrix>& body() const noexcept { return body_; }
    std::size_t dimension() const; // linear only
    /// |C|, saturating at UINT64_MAX.
    std::uint64_t size() const noexcept;
    bool contains(const Matrix& x) const;
    /// All codewords in canonical order; throws TooLarge beyond `cap`.
    std::vector<Matrix> members(std::uint64_t cap = Caps{}.members) const;
    /// Linear code as a subspace of GF(q)^{mn}.
    Subspace as_subspace() const;

    /// Same parameters and same set of codewords.
    bool same_code(const RankCode& o, std::uint64_t cap = Caps{}.members) const;

  private:
    RankCode(FieldPtr field, std::size_t m, std::size_t n, std::size_t d, CodeKind kind, std::vector<Matrix> body);

    FieldPtr field_;
    std::size_t m_, n_, d_;
    CodeKind kind_;
    std::vector<Matrix> body_;
};

/// Vectorized generators -> matrices.
std::vector<Matrix> to_matrices(const FieldPtr& field, std::size_t m, std::size_t n, const std::vector<Vec>& vs);

/// Exact minimum rank distance. Linear codes scan nonzero codewords; explicit codes scan all pairs.
std::size_t min_rank_distance(const RankCode& c, std::uint64_t cap = Caps{}.members);
/// min over all pairs, also for linear codes (differential oracle).
std::size_t min_rank_distance_pairwise(const RankCode& c, std::uint64_t cap = Caps{}.members);
/// |C| equals the MRD cardinality and every distance is at least d.
bool is_mrd(const RankCode& c, std::uint64_t cap = Caps{}.members);
bool has_mrd_cardinality(const RankCode& c);

/// Rank histogram of differences: pair_counts[r] = #{(x,y) in C^2 : rank(x-y) = r}. Dividing by |C| gives
/// the distribution around a codeword; for linear codes this is the weight distribution.
struct RankDistribution {
    std::vector<std::uint64_t> pair_counts;
    std::uint64_t size = 0;
    bool integral() const;
    double value(std::size_t r) const { return static_cast<double>(pair_counts[r]) / static_cast<double>(size); }
    friend bool operator==(const RankDistribution&, const RankDistribution&) = default;
};
RankDistribution rank_weight_distribution(const RankCode& c, std::uint64_t cap = Caps{}.members);

/// {X0 + Y K : Y in GF(q)^{m x n'}} (column kind, K n' x n of full row rank) or
/// {X0 + L Y : Y in GF(q)^{n' x n}} (row kind, L m x n' of full column rank).
struct Anticode {
    enum class Kind { column, row };
    Kind kind = Kind::column;
    Matrix offset;
    /// Row space of K (column kind, ambient n) or column space of L (row kind, ambient m).
    Subspace space;
    std::size_t diameter() const noexcept { return space.dim(); }
    bool contains(const Matrix& x) const;
    /// All q^{m n'} (column) or q^{n n'} (row) members.
    std::vector<Matrix> members() const;
};

/// Number of anticodes enumerate_anticodes would return (saturating).
std::uint64_t count_anticodes(std::uint32_t q, std::size_t m, std::size_t n, std::size_t diameter);
/// Maximum n'-anticodes of B_q(m,n): column kind when n <= m, row kind when m <= n (both when square).
/// One anticode per subspace and per coset, offsets supported off the pivot positions. Throws TooLarge when
/// the count exceeds `cap`.
std::vector<Anticode> enumerate_anticodes(const FieldPtr& field, std::size_t m, std::size_t n,
                                          std::size_t diameter, std::uint64_t cap = Caps{}.anticode_checks);
/// B n S where S holds the matrices with rows m'..m-1 zero, as an anticode of B_q(m',n), if nonempty.
std::optional<Anticode> anticode_restrict(const Anticode& b, std::size_t m_prime);

struct AnticodeReport {
    bool mrd = false;
    std::uint64_t anticodes = 0;
    /// First anticode not met exactly once, with its intersection size.
    std::optional<std::size_t> failing_index;
    std::size_t failing_count = 0;
};
/// |C n B| == 1 for every (d-1)-anticode B. Throws TooLarge when anticodes x |C| exceeds `cap`.
AnticodeReport verify_mrd_by_anticodes(const RankCode& c, std::uint64_t cap = Caps{}.anticode_checks);

/// Matrices of B_q(m,n) with rows m'..m-1 zero, as a subspace of GF(q)^{mn}.
Subspace row_supported_space(const FieldPtr& field, std::size_t m, std::size_t n, std::size_t m_prime);

struct CosetDecomposition {
    std::size_t m_prime = 0;
    /// C n S inside B_q(m,n), and the same code with the zero rows dropped (in B_q(m',n)).
    RankCode subcode;
    RankCode restricted;
    /// Canonical (smallest) representative of each coset of C n S in C, sorted; the zero coset is first.
    std::vector<Matrix> reps;
    /// True when C n S = {0}.
    bool trivial_subcode = false;

    std::vector<Matrix> coset(std::size_t i, std::uint64_t cap = Caps{}.members) const;
};
/// Throws NotLinear, BadRowCount.
CosetDecomposition coset_decomposition(const RankCode& c, std::size_t m_prime);

/// Smallest member of x + U (U given by its reduced echelon basis).
Matrix canonical_coset_rep(const Subspace& u, const Matrix& x);

} // namespace mrd
