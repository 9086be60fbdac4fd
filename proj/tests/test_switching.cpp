#include <limits>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mrd/constructions.hpp"
#include "mrd/error.hpp"
#include "mrd/invariants.hpp"
#include "mrd/switching.hpp"

using namespace mrd;
using helpers::to_mask;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

RankCode c1_code() { return construction1({Tower::make(2, 1, 4), 2, 2, 2, std::nullopt, std::nullopt}).C; }

std::set<unsigned long long> masks(const RankCode& c) {
    std::set<unsigned long long> s;
    for (const auto& x : c.members()) s.insert(to_mask(x));
    return s;
}

// Affine rank by an independent bitmask elimination over GF(2).
std::size_t oracle_affine_rank(const RankCode& c) {
    const auto words = c.members();
    std::vector<unsigned long long> basis;
    const auto c0 = to_mask(words.front());
    for (const auto& w : words) {
        auto v = to_mask(w) ^ c0;
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    return basis.size();
}

} // namespace

TEST_CASE("single switches over every MRD replacement") {
    const auto f = helpers::gf2();
    const auto c = c1_code();
    const auto rs = helpers::oracle_mrd_b222(f);
    REQUIRE(rs.size() == 8);
    std::set<std::set<unsigned long long>> results;
    for (const auto& r : rs) {
        const auto s = switch_subcode(c, 2, r);
        REQUIRE(s.size() == 16);
        REQUIRE(is_mrd(s));
        // Codewords outside the row-supported part are untouched.
        for (const auto& x : c.members())
            if (!(x.row_block(2, 2).is_zero())) REQUIRE(s.contains(x));
        results.insert(masks(s));
    }
    CHECK(results.size() == 8);

    const auto dec = coset_decomposition(c, 2);
    const auto same = switch_subcode(c, 2, dec.restricted);
    CHECK(same.is_linear());
    CHECK(same.same_code(c));

    // Gabidulin in B_2(4,2) meets S only in {0}.
    const auto g = gabidulin(Tower::make(2, 1, 4), 2, 1);
    CHECK(code_of([&] { switch_subcode(g, 2, rs.front()); }) == ErrorCode::SubcodeNotMRD);
    CHECK(code_of([&] { switch_subcode(c, 1, rs.front()); }) == ErrorCode::BadRowCount);
    const auto non_mrd = RankCode::explicit_set(f, 2, 2, 2, {helpers::from_mask(f, 2, 2, 0), helpers::from_mask(f, 2, 2, 1),
                                                             helpers::from_mask(f, 2, 2, 6), helpers::from_mask(f, 2, 2, 9)});
    CHECK(code_of([&] { switch_subcode(c, 2, non_mrd); }) == ErrorCode::ReplacementNotMRD);
    CHECK(code_of([&] { switch_subcode(c, 2, gabidulin(Tower::make(2, 1, 2), 2, 2)); }) == ErrorCode::ParamMismatch);
}

TEST_CASE("switch plans") {
    const auto f = helpers::gf2();
    const auto c = c1_code();
    const auto dec = coset_decomposition(c, 2);
    REQUIRE(dec.reps.size() == 4);

    SwitchPlan keep{c, 2, std::vector<Directive>(4, Directive::keep())};
    const auto k = apply_switch_plan(keep);
    CHECK(k.is_linear());
    CHECK(k.same_code(c));

    SwitchPlan wrong{c, 2, std::vector<Directive>(3, Directive::keep())};
    CHECK(code_of([&] { apply_switch_plan(wrong); }) == ErrorCode::FamilyIncomplete);

    // Every translate-only plan gives an MRD code; translating by a subcode element is the identity.
    const auto all = helpers::all_b222(f);
    const std::set<unsigned long long> sub = masks(dec.restricted);
    std::size_t distinct_changed = 0;
    for (unsigned y = 0; y < 16; ++y) {
        SwitchPlan p{c, 2, std::vector<Directive>(4, Directive::keep())};
        p.directives[1] = Directive::translate(all[y]);
        const auto r = apply_switch_plan(p);
        REQUIRE(is_mrd(r));
        if (sub.count(y)) {
            REQUIRE(r.same_code(c));
        } else {
            REQUIRE(!r.same_code(c));
            ++distinct_changed;
        }
    }
    CHECK(distinct_changed == 12);

    for (unsigned mask = 0; mask < 256; ++mask) {
        SwitchPlan p{c, 2, {}};
        for (int i = 0; i < 4; ++i) p.directives.push_back(Directive::translate(all[(mask >> (2 * i)) & 3]));
        REQUIRE(is_mrd(apply_switch_plan(p)));
    }

    // Replacing only the zero coset equals the single switch; replacing every coset stays MRD.
    for (const auto& r : helpers::oracle_mrd_b222(f)) {
        SwitchPlan p{c, 2, std::vector<Directive>(4, Directive::keep())};
        p.directives[0] = Directive::replace(r);
        REQUIRE(apply_switch_plan(p).same_code(switch_subcode(c, 2, r)));
        SwitchPlan q{c, 2, std::vector<Directive>(4, Directive::replace(r))};
        REQUIRE(is_mrd(apply_switch_plan(q)));
    }
}

TEST_CASE("row additions and shrinking intersections") {
    const auto t = Tower::make(2, 1, 2);
    const auto m = gabidulin(t, 2, 1);
    const auto added = add_row(m, 0, 1);
    CHECK(added.is_linear());
    CHECK(is_mrd(added));
    for (const auto& x : m.members()) {
        Matrix y = x;
        for (std::size_t c = 0; c < 2; ++c) y(1, c) = y.F().add(y(1, c), y(0, c));
        REQUIRE(added.contains(y));
    }
    for (const auto& x : m.members()) {
        if (x.is_zero()) continue;
        const auto a = avoid_vector_code(m, x);
        REQUIRE(is_mrd(a));
        REQUIRE(!a.contains(x));
    }
    const auto fam = shrink_intersection_family(m, 2);
    REQUIRE(fam.size() == 3);
    Subspace inter = fam[0].as_subspace();
    for (std::size_t i = 0; i < fam.size(); ++i) {
        REQUIRE(is_mrd(fam[i]));
        inter = inter.intersect(fam[i].as_subspace());
        REQUIRE(inter.dim() + i <= m.dimension());
    }
    CHECK(inter.dim() == 0);

    const auto g6 = gabidulin(Tower::make(2, 1, 3), 3, 2);
    const auto fam6 = shrink_intersection_family(g6, 3);
    Subspace i6 = fam6[0].as_subspace();
    for (std::size_t i = 0; i < fam6.size(); ++i) {
        REQUIRE(is_mrd(fam6[i]));
        i6 = i6.intersect(fam6[i].as_subspace());
        REQUIRE(i6.dim() + i <= g6.dimension());
    }
}

TEST_CASE("affine rank plans and codes") {
    CHECK(affine_rank_plan(2, 4, 2, 2).rho == 1);
    CHECK(affine_rank_plan(2, 4, 2, 2).m_prime == 2);
    CHECK(affine_rank_plan(2, 6, 2, 2).rho == 3);
    CHECK(affine_rank_plan(2, 6, 2, 2).m_prime == 3);
    CHECK(code_of([] { affine_rank_plan(2, 3, 2, 2); }) == ErrorCode::ParamOutOfRange);
    CHECK(code_of([] { affine_rank_plan(2, 4, 2, 1); }) == ErrorCode::ParamOutOfRange);

    const auto f = helpers::gf2();
    for (std::size_t target : {4, 5}) {
        const auto c = build_affine_rank_code(f, 4, 2, 2, target);
        REQUIRE(is_mrd(c));
        REQUIRE(oracle_affine_rank(c) == target);
        REQUIRE(affine_rank(c) == target);
    }
    for (std::size_t target : {6, 7, 8, 9}) {
        const auto c = build_affine_rank_code(f, 6, 2, 2, target);
        REQUIRE(is_mrd(c));
        REQUIRE(oracle_affine_rank(c) == target);
        REQUIRE(affine_rank(c) == target);
    }
    CHECK(code_of([&] { build_affine_rank_code(f, 4, 2, 2, 6); }) == ErrorCode::TargetOutOfRange);
    CHECK(code_of([&] { build_affine_rank_code(f, 4, 2, 2, 3); }) == ErrorCode::TargetOutOfRange);
}

TEST_CASE("aperiodic code") {
    const auto f = helpers::gf2();
    const auto c = build_aperiodic_code(f, 4, 2, 2);
    REQUIRE(c.size() == 16);
    CHECK(is_mrd(c));
    CHECK(verify_mrd_by_anticodes(c).mrd);
    CHECK(is_aperiodic(c));
    // Full-space scan: no nonzero X in B_2(4,2) with C + X = C.
    const auto words = masks(c);
    std::size_t periods = 0;
    for (unsigned long long x = 1; x < 256; ++x) {
        bool ok = true;
        for (auto w : words) ok = ok && words.count(w ^ x);
        periods += ok;
    }
    CHECK(periods == 0);
}

TEST_CASE("census") {
    const auto f = helpers::gf2();
    const auto c = c1_code();
    const auto rs = helpers::oracle_mrd_b222(f);
    const auto dec = coset_decomposition(c, 2);
    std::vector<RankCode> choices{dec.restricted};
    for (const auto& r : rs)
        if (!r.same_code(dec.restricted)) {
            choices.push_back(r);
            break;
        }
    std::set<std::set<unsigned long long>> seen;
    std::vector<std::vector<std::size_t>> order;
    enumerate_switched(c, 2, choices, [&](const std::vector<std::size_t>& ch, const RankCode& code) {
        REQUIRE(is_mrd(code));
        seen.insert(masks(code));
        order.push_back(ch);
    });
    CHECK(order.size() == 16);
    CHECK(seen.size() == 16);
    CHECK(order[1] == std::vector<std::size_t>{0, 0, 0, 1});
    CHECK(order.front() == std::vector<std::size_t>{0, 0, 0, 0});

    CHECK(census_size(4, 8) == 4096);
    CHECK(census_size(40, 8) == std::numeric_limits<std::uint64_t>::max());
    CHECK(code_of([&] { enumerate_switched(c, 2, rs, [](const auto&, const auto&) {}, 4095); }) == ErrorCode::TooLarge);

    // Full census with every MRD replacement: 8^4 plans, all MRD and pairwise distinct.
    std::size_t plans = 0;
    std::set<std::set<unsigned long long>> full;
    enumerate_switched(c, 2, rs, [&](const auto&, const RankCode& code) {
        ++plans;
        REQUIRE(has_mrd_cardinality(code));
        REQUIRE(min_rank_distance(code) == 2);
        full.insert(masks(code));
    });
    CHECK(plans == 4096);
    CHECK(full.size() == 4096);
    const auto b = count_bounds(2, 4, 2, 2, 2);
    CHECK(seen.size() >= *b.lower.value);
}
