#include "mrd/switching.hpp"

#include <algorithm>
#include <limits>

#include "mrd/constructions.hpp"
#include "mrd/error.hpp"

namespace mrd {

namespace {

bool lower_rows_zero(const Matrix& x, std::size_t m_prime) {
    for (std::size_t r = m_prime; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (x(r, c) != 0) return false;
    return true;
}

void check_replacement(const RankCode& r, const RankCode& restricted, std::uint64_t cap) {
    require(r.F().same_as(restricted.F()) && r.params() == restricted.params(), ErrorCode::ParamMismatch,
            "replacement must have parameters (q, m', n, d)");
    require(is_mrd(r, cap), ErrorCode::ReplacementNotMRD, "replacement code is not MRD");
}

CosetDecomposition checked_decomposition(const RankCode& c, std::size_t m_prime, std::uint64_t cap) {
    auto dec = coset_decomposition(c, m_prime);
    require(dec.subcode.size() > 1 && is_mrd(dec.restricted, cap), ErrorCode::SubcodeNotMRD,
            "the row-supported subcode is not MRD in B_q(m', n)");
    return dec;
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
        r *= b;
    }
    return r;
}

// x + R (R padded with zero rows).
void push_shifted(std::vector<Matrix>& out, const Matrix& x, const std::vector<Matrix>& r) {
    for (const auto& y : r) out.push_back(x + y.pad_rows(x.rows()));
}

void check_growth_params(std::size_t m, std::size_t n, std::size_t d) {
    require(1 < d && d <= n && 2 * n <= m, ErrorCode::ParamOutOfRange, "need 1 < d <= n <= m/2");
}

} // namespace

RankCode switch_subcode(const RankCode& c, std::size_t m_prime, const RankCode& r, std::uint64_t cap) {
    require(c.n() <= m_prime && m_prime <= c.m(), ErrorCode::BadRowCount, "need n <= m' <= m");
    require(is_mrd(c, cap), ErrorCode::NotMRDInput, "base code is not MRD");
    const auto words = c.members(cap);
    std::vector<Matrix> rest, sub;
    for (const auto& x : words) (lower_rows_zero(x, m_prime) ? sub : rest).push_back(x);
    std::vector<Matrix> cut;
    for (const auto& x : sub) cut.push_back(x.row_block(0, m_prime));
    const auto restricted = RankCode::explicit_set(c.field(), m_prime, c.n(), c.d(), std::move(cut));
    require(restricted.size() > 1 && is_mrd(restricted, cap), ErrorCode::SubcodeNotMRD,
            "the row-supported subcode is not MRD in B_q(m', n)");
    check_replacement(r, restricted, cap);
    if (r.same_code(restricted, cap)) return c;
    for (const auto& y : r.members(cap)) rest.push_back(y.pad_rows(c.m()));
    return RankCode::explicit_set(c.field(), c.m(), c.n(), c.d(), std::move(rest));
}

RankCode apply_switch_plan(const SwitchPlan& plan, std::uint64_t cap) {
    const RankCode& c = plan.base;
    const auto dec = checked_decomposition(c, plan.m_prime, cap);
    require(plan.directives.size() == dec.reps.size(), ErrorCode::FamilyIncomplete,
            "plan needs one directive per coset (" + std::to_string(dec.reps.size()) + ")");
    bool changed = false;
    for (const auto& d : plan.directives) {
        if (d.kind == Directive::Kind::translate) {
            require(d.shift.has_value(), ErrorCode::ParamMismatch, "translate directive without a matrix");
            const Matrix& y = *d.shift;
            require(y.rows() == plan.m_prime && y.cols() == c.n() && y.F().same_as(c.F()), ErrorCode::ParamMismatch,
                    "translation must be an m' x n matrix over GF(q)");
            changed = changed || !dec.restricted.contains(y);
        } else if (d.kind == Directive::Kind::replace) {
            require(d.code.has_value(), ErrorCode::ParamMismatch, "replace directive without a code");
            check_replacement(*d.code, dec.restricted, cap);
            changed = changed || !d.code->same_code(dec.restricted, cap);
        }
    }
    if (!changed) return c;
    require(c.size() <= cap, ErrorCode::TooLarge, "switched code exceeds the member cap");

    const auto sub = dec.restricted.members(cap);
    std::vector<Matrix> words;
    for (std::size_t i = 0; i < dec.reps.size(); ++i) {
        const auto& d = plan.directives[i];
        if (d.kind == Directive::Kind::replace) {
            push_shifted(words, dec.reps[i], d.code->members(cap));
        } else if (d.kind == Directive::Kind::translate) {
            push_shifted(words, dec.reps[i] + d.shift->pad_rows(c.m()), sub);
        } else {
            push_shifted(words, dec.reps[i], sub);
        }
    }
    return RankCode::explicit_set(c.field(), c.m(), c.n(), c.d(), std::move(words));
}

// ---------------------------------------------------------------------------------------------------------

RankCode add_row(const RankCode& c, std::size_t i, std::size_t j) {
    require(i < c.m() && j < c.m() && i != j, ErrorCode::BadParameters, "row indices must be distinct and in range");
    auto op = [&](Matrix x) {
        for (std::size_t k = 0; k < x.cols(); ++k) x(j, k) = x.F().add(x(j, k), x(i, k));
        return x;
    };
    std::vector<Matrix> out;
    for (const auto& x : c.body()) out.push_back(op(x));
    if (c.is_linear()) return RankCode::linear(c.field(), c.m(), c.n(), c.d(), std::move(out));
    return RankCode::explicit_set(c.field(), c.m(), c.n(), c.d(), std::move(out));
}

RankCode avoid_vector_code(const RankCode& m, const Matrix& x) {
    require(m.is_linear(), ErrorCode::NotLinear, "avoid_vector_code needs a linear code");
    require(m.d() > 1 && m.m() > 1, ErrorCode::BadParameters, "need d > 1 and at least two rows");
    require(x.rows() == m.m() && x.cols() == m.n(), ErrorCode::ShapeMismatch, "vector shape differs from code");
    if (!m.contains(x)) return m;
    std::size_t i = 0;
    while (x.row(i) == Vec(x.cols(), 0)) ++i;
    return add_row(m, i, i == 0 ? 1 : 0);
}

std::vector<RankCode> shrink_intersection_family(const RankCode& m, std::size_t k) {
    require(k <= m.dimension(), ErrorCode::BadParameters, "k exceeds dim M");
    std::vector<RankCode> family{m};
    Subspace common = m.as_subspace();
    for (std::size_t t = 1; t <= k; ++t) {
        // After the common part vanishes, a generator of M_1 keeps the later members away from M_1.
        const Vec& v = common.dim() > 0 ? common.basis().front()
                       : family.size() > 1 ? family[1].body().front().entries()
                                           : m.body().front().entries();
        auto next = avoid_vector_code(m, Matrix::from_vec(m.field(), m.m(), m.n(), v));
        common = common.intersect(next.as_subspace());
        family.push_back(std::move(next));
    }
    return family;
}

// ---------------------------------------------------------------------------------------------------------

AffineRankPlan affine_rank_plan(std::uint32_t q, std::size_t m, std::size_t n, std::size_t d) {
    check_growth_params(m, n, d);
    AffineRankPlan best{0, 0};
    bool first = true;
    for (std::size_t mp = n; mp + n <= m; ++mp) {
        const std::uint64_t e = (m - mp) * (n - d + 1);
        const std::uint64_t qe = sat_pow(q, e);
        const std::uint64_t b = qe > e + 1 ? qe - e - 1 : 0;
        const std::size_t val = static_cast<std::size_t>(std::min<std::uint64_t>(mp * (d - 1), b));
        if (first || val > best.rho) best = {mp, val};
        first = false;
    }
    return best;
}

RankCode build_affine_rank_code(const FieldPtr& base, std::size_t m, std::size_t n, std::size_t d, std::size_t target) {
    const auto plan = affine_rank_plan(base->size(), m, n, d);
    const std::size_t lo = m * (n - d + 1);
    require(lo <= target && target <= lo + plan.rho, ErrorCode::TargetOutOfRange,
            "target affine rank must lie in [" + std::to_string(lo) + ", " + std::to_string(lo + plan.rho) + "]");
    const std::size_t mp = plan.m_prime, k = n - d + 1;
    const auto top = gabidulin(Tower::make(base, static_cast<std::uint32_t>(mp)), n, k);
    const auto bottom = gabidulin(Tower::make(base, static_cast<std::uint32_t>(m - mp)), n, k);
    const auto c = product(top, bottom);
    if (target == lo) return c;

    const auto dec = coset_decomposition(c, mp);
    // P': representatives that enlarge <M, P'>, scanned in canonical order.
    Subspace span = dec.subcode.as_subspace();
    std::vector<bool> in_p(dec.reps.size(), false);
    for (std::size_t i = 1; i < dec.reps.size() && span.dim() < c.dimension(); ++i) {
        const auto& v = dec.reps[i].entries();
        if (span.contains(v)) continue;
        span = span.sum(Subspace::span(base, m * n, {v}));
        in_p[i] = true;
    }
    const auto z = dec.restricted.as_subspace().complete_basis(Subspace::full(base, mp * n));

    SwitchPlan sp{c, mp, std::vector<Directive>(dec.reps.size())};
    std::size_t used = 0;
    for (std::size_t i = 1; i < dec.reps.size() && used < target - lo; ++i) {
        if (in_p[i]) continue;
        sp.directives[i] = Directive::translate(Matrix::from_vec(base, mp, n, z[used++]));
    }
    require(used == target - lo, ErrorCode::NotEnoughCosets, "not enough cosets outside P'");
    return apply_switch_plan(sp);
}

RankCode build_aperiodic_code(const FieldPtr& base, std::size_t m, std::size_t n, std::size_t d) {
    check_growth_params(m, n, d);
    const std::size_t k = n - d + 1;
    const auto top = gabidulin(Tower::make(base, static_cast<std::uint32_t>(n)), n, k);
    const auto bottom = gabidulin(Tower::make(base, static_cast<std::uint32_t>(m - n)), n, k);
    const auto c = product(top, bottom);
    const auto dec = coset_decomposition(c, n);
    const std::size_t r = n * k;
    require(dec.reps.size() > r, ErrorCode::NotEnoughCosets, "need more than n(n-d+1) cosets");
    const auto family = shrink_intersection_family(dec.restricted, r);
    SwitchPlan sp{c, n, std::vector<Directive>(dec.reps.size())};
    for (std::size_t i = 0; i <= r; ++i) sp.directives[i] = Directive::replace(family[i]);
    return apply_switch_plan(sp);
}

// ---------------------------------------------------------------------------------------------------------

std::uint64_t census_size(std::size_t cosets, std::size_t choices) { return sat_pow(choices, cosets); }

void enumerate_switched(const RankCode& c, std::size_t m_prime, const std::vector<RankCode>& replacements,
                        const std::function<void(const std::vector<std::size_t>&, const RankCode&)>& fn,
                        std::uint64_t census_cap, std::uint64_t cap) {
    const auto dec = checked_decomposition(c, m_prime, cap);
    require(!replacements.empty(), ErrorCode::BadParameters, "need at least one replacement");
    for (const auto& r : replacements) check_replacement(r, dec.restricted, cap);
    const std::uint64_t total = census_size(dec.reps.size(), replacements.size());
    require(total <= census_cap, ErrorCode::TooLarge,
            "census of " + std::to_string(total) + " plans exceeds the cap " + std::to_string(census_cap));
    require(c.size() <= cap, ErrorCode::TooLarge, "switched code exceeds the member cap");

    std::vector<bool> is_keep;
    std::vector<std::vector<Matrix>> members;
    for (const auto& r : replacements) {
        is_keep.push_back(r.same_code(dec.restricted, cap));
        members.push_back(r.members(cap));
    }
    std::vector<std::size_t> choice(dec.reps.size(), 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        const bool keep = std::all_of(choice.begin(), choice.end(), [&](std::size_t k) { return is_keep[k]; });
        if (keep) {
            fn(choice, c);
        } else {
            std::vector<Matrix> words;
            for (std::size_t i = 0; i < choice.size(); ++i) push_shifted(words, dec.reps[i], members[choice[i]]);
            fn(choice, RankCode::explicit_set(c.field(), c.m(), c.n(), c.d(), std::move(words)));
        }
        for (std::size_t i = choice.size(); i-- > 0;) {
            if (++choice[i] < replacements.size()) break;
            choice[i] = 0;
        }
    }
}

} // namespace mrd
