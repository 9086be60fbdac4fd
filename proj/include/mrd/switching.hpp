#pragma once

// Switching row-supported MRD subcodes: single switches, per-coset plans, censuses, and the builders for
// prescribed affine rank and for aperiodic codes.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mrd/code.hpp"

namespace mrd {

/// C - (C n S) + R, where S holds the matrices with rows m'.. zero and R (in B_q(m',n)) is padded with zero
/// rows. Returns C itself when R equals the restricted subcode. Throws NotMRDInput (C), BadRowCount,
/// SubcodeNotMRD, ParamMismatch, ReplacementNotMRD.
RankCode switch_subcode(const RankCode& c, std::size_t m_prime, const RankCode& r, std::uint64_t cap = Caps{}.members);

struct Directive {
    enum class Kind { keep, translate, replace };
    Kind kind = Kind::keep;
    std::optional<Matrix> shift;      // translate: y in B_q(m',n)
    std::optional<RankCode> code;     // replace: R in B_q(m',n)

    static Directive keep() { return {}; }
    static Directive translate(Matrix y) { return {Kind::translate, std::move(y), std::nullopt}; }
    static Directive replace(RankCode r) { return {Kind::replace, std::nullopt, std::move(r)}; }
};

/// One directive per canonical coset representative of coset_decomposition(base, m_prime), by index.
/// Coset x + (C n S) becomes x + (C n S) + y (translate) or x + R (replace), R padded with zero rows.
struct SwitchPlan {
    RankCode base;
    std::size_t m_prime = 0;
    std::vector<Directive> directives;
};

/// Returns the base code unchanged when no directive changes its coset, otherwise an explicit code.
/// Throws NotLinear, BadRowCount, SubcodeNotMRD, FamilyIncomplete (wrong directive count), ParamMismatch,
/// ReplacementNotMRD, TooLarge.
RankCode apply_switch_plan(const SwitchPlan& plan, std::uint64_t cap = Caps{}.members);

/// Row operation pi_{i,j}: row j += row i.
RankCode add_row(const RankCode& c, std::size_t i, std::size_t j);
/// M if x is not in M, else pi_{i,j}(M) with i the first nonzero row of x and j the first other row.
/// Throws NotLinear, BadParameters (d = 1 or m = 1).
RankCode avoid_vector_code(const RankCode& m, const Matrix& x);
/// [M_0 = M, M_1, ..., M_k] with dim(M_0 n ... n M_k) <= dim M - k.
std::vector<RankCode> shrink_intersection_family(const RankCode& m, std::size_t k);

struct AffineRankPlan {
    std::size_t m_prime = 0;
    std::size_t rho = 0;
};
/// rho = max over m' in [n, m-n] of min{m'(d-1), q^{(m-m')(n-d+1)} - (m-m')(n-d+1) - 1}, with the first
/// maximizing m'. Throws ParamOutOfRange unless 1 < d <= n <= m/2.
AffineRankPlan affine_rank_plan(std::uint32_t q, std::size_t m, std::size_t n, std::size_t d);
/// MRD code of affine rank `target` in [m(n-d+1), m(n-d+1) + rho]. Throws ParamOutOfRange, TargetOutOfRange.
RankCode build_affine_rank_code(const FieldPtr& base, std::size_t m, std::size_t n, std::size_t d, std::size_t target);
/// Aperiodic MRD code: product of Gabidulin codes with the first n(n-d+1)+1 cosets switched to a
/// shrinking-intersection family. Throws ParamOutOfRange, NotEnoughCosets.
RankCode build_aperiodic_code(const FieldPtr& base, std::size_t m, std::size_t n, std::size_t d);

/// Number of plans enumerate_switched would produce (saturating).
std::uint64_t census_size(std::size_t cosets, std::size_t choices);
/// For every assignment of a replacement to each coset (first coset slowest), calls fn(choice, code) with
/// code = union of x_i + R_{choice[i]}. Throws TooLarge when the plan count exceeds `census_cap`.
void enumerate_switched(const RankCode& c, std::size_t m_prime, const std::vector<RankCode>& replacements,
                        const std::function<void(const std::vector<std::size_t>&, const RankCode&)>& fn,
                        std::uint64_t census_cap = Caps{}.census, std::uint64_t cap = Caps{}.members);

} // namespace mrd
