#include "mrd/constructions.hpp"

#include <algorithm>

#include "mrd/error.hpp"

namespace mrd {

namespace {

std::vector<Elem> as_elements(const Tower& t, const std::vector<Vec>& vs) {
    std::vector<Elem> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(t.from_coords(v));
    return out;
}

Elem signed_one(const Field& F, std::uint64_t exponent) { return exponent % 2 == 0 ? 1 : F.neg(1); }

// A o (a_0 x + ... + a_k x^{q^k} + eta a_0 x^{q^{k+1}}), k = tuple size - 1.
LinPoly twisted_poly(const LinPoly& A, const std::vector<Elem>& a, Elem eta) {
    const Field& F = A.T().F();
    std::vector<Elem> c(a);
    c.push_back(F.mul(eta, a.at(0)));
    return lp_compose(A, LinPoly(A.tower(), c));
}

struct TwistedInput {
    TowerPtr tower;
    std::uint32_t m1 = 0;
    std::size_t n = 0, d = 0;
    std::vector<Elem> W, W1;
    std::vector<std::vector<Elem>> S;
    Elem eta = 0;
};

TwistedCodes build_twisted(const TwistedInput& in) {
    const Tower& T = *in.tower;
    const FieldPtr& K = T.base();
    const std::size_t m = T.m();

    const LinPoly A = lp_annihilator(in.tower, in.W);
    const Subspace w1 = element_span(T, in.W1);
    auto W1 = as_elements(T, w1.basis());
    auto e_basis = as_elements(T, w1.complete_basis(Subspace::full(K, m)));
    e_basis.insert(e_basis.end(), W1.begin(), W1.end());
    auto f_basis = lp_image_basis(A);
    require(f_basis.size() == in.n, ErrorCode::BadParameters, "image of the annihilator must have dimension n");

    const std::size_t len = in.n - in.d + 1;
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < len; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            std::vector<Elem> a(len, 0);
            a[i] = T.basis(j);
            gens.push_back(lp_to_matrix(twisted_poly(A, a, in.eta), e_basis, f_basis));
        }

    std::vector<Matrix> sub;
    for (const auto& s : in.S) {
        const Matrix x = lp_to_matrix(twisted_poly(A, s, in.eta), e_basis, f_basis);
        for (std::size_t r = in.m1; r < m; ++r)
            for (std::size_t c = 0; c < in.n; ++c)
                require(x(r, c) == 0, ErrorCode::P2Violated, "subcode matrix has a nonzero row below m1");
        sub.push_back(x.row_block(0, in.m1));
    }
    return TwistedCodes{RankCode::linear(K, m, in.n, in.d, std::move(gens)),
                        RankCode::linear(K, in.m1, in.n, in.d, std::move(sub)),
                        A,
                        A.coeff(0),
                        in.eta,
                        as_elements(T, element_span(T, in.W).basis()),
                        std::move(W1),
                        std::move(e_basis),
                        std::move(f_basis),
                        in.S};
}

void check_twisted_shape(const Tower& T, std::uint32_t m1, std::size_t n, std::size_t d) {
    require(2 <= d && d <= n && n <= m1 && m1 < T.m(), ErrorCode::BadParameters, "need 2 <= d <= n <= m1 < m");
}

TwistedInput resolve_c1(const Construction1Params& p) {
    require(p.tower != nullptr, ErrorCode::BadParameters, "missing tower");
    const Tower& T = *p.tower;
    const std::uint32_t m = T.m();
    check_twisted_shape(T, p.m1, p.n, p.d);
    require(m % p.m1 == 0, ErrorCode::BadTower, "m1 must divide m");

    TwistedInput in;
    in.tower = p.tower;
    in.m1 = p.m1;
    in.n = p.n;
    in.d = p.d;
    in.W1 = trace_kernel_basis(T, p.m1);
    const Subspace w1 = element_span(T, in.W1);
    if (p.W) {
        const Subspace w = element_span(T, *p.W);
        require(w.dim() == m - p.n, ErrorCode::BadParameters, "W must have dimension m - n");
        require(w.contains(w1), ErrorCode::BadSubspaceChain, "W must contain ker Tr_{q^m/q^m1}");
        in.W = as_elements(T, w.basis());
    } else {
        in.W = in.W1;
        const auto extra = as_elements(T, w1.complete_basis(Subspace::full(T.base(), m)));
        in.W.insert(in.W.end(), extra.begin(), extra.begin() + (p.m1 - p.n));
    }

    const Elem alpha0 = lp_annihilator(p.tower, in.W).coeff(0);
    if (p.eta) {
        require(*p.eta < T.F().size() && T.frobenius(*p.eta, p.m1) == *p.eta, ErrorCode::BadParameters,
                "eta must lie in GF(q^m1)");
        require(eta_admissible(T, p.m1, p.d, alpha0, *p.eta, EtaVariant::c1), ErrorCode::EtaConditionViolated,
                "norm condition fails for eta = " + T.F().element_text(*p.eta));
        in.eta = *p.eta;
    } else {
        const TowerEmbedding sub(Tower::make(T.base(), p.m1), p.tower);
        const auto& image = sub.image();
        const auto it = std::find_if(image.begin(), image.end(), [&](Elem e) {
            return eta_admissible(T, p.m1, p.d, alpha0, e, EtaVariant::c1);
        });
        in.eta = *it; // 0 is always admissible
    }

    const std::size_t len = p.n - p.d + 1;
    for (std::size_t i = 0; i < len; ++i)
        for (Elem b : subfield_basis(T, p.m1)) {
            std::vector<Elem> a(len, 0);
            a[i] = b;
            in.S.push_back(std::move(a));
        }
    return in;
}

} // namespace

// ---------------------------------------------------------------------------------------------------------

RankCode gabidulin(const TowerPtr& tower, std::size_t n, std::size_t k, std::optional<std::vector<Elem>> generators) {
    require(tower != nullptr, ErrorCode::BadParameters, "missing tower");
    const Tower& T = *tower;
    const std::size_t m = T.m();
    require(1 <= k && k <= n && n <= m, ErrorCode::BadParameters, "need 1 <= k <= n <= m");
    std::vector<Elem> g;
    if (generators) {
        g = *generators;
        require(g.size() == n, ErrorCode::BadParameters, "need exactly n generators");
        for (Elem x : g) require(x < T.F().size(), ErrorCode::BadParameters, "generator outside GF(q^m)");
        require(element_span(T, g).dim() == n, ErrorCode::DependentGenerators, "generators are dependent over GF(q)");
    } else {
        for (std::uint32_t j = 0; j < n; ++j) g.push_back(T.basis(j));
    }

    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t b = 0; b < m; ++b) {
            const auto L = LinPoly::monomial(tower, T.basis(b), static_cast<std::int64_t>(i));
            Matrix x(T.base(), m, n);
            for (std::size_t j = 0; j < n; ++j) {
                const auto c = T.coords(lp_eval(L, g[j]));
                for (std::size_t r = 0; r < m; ++r) x(r, j) = c[r];
            }
            basis.push_back(std::move(x));
        }
    return RankCode::linear(T.base(), m, n, n - k + 1, std::move(basis));
}

Elem subfield_norm(const Tower& tower, Elem x, std::uint32_t s) {
    Elem acc = 1;
    for (std::uint32_t i = 0; i < s; ++i) acc = tower.F().mul(acc, tower.frobenius(x, i));
    return acc;
}

bool eta_admissible(const Tower& tower, std::uint32_t m1, std::size_t d, Elem alpha0, Elem eta, EtaVariant variant) {
    const Field& F = tower.F();
    const std::uint32_t m = tower.m();
    require(alpha0 != 0, ErrorCode::BadParameters, "alpha0 must be nonzero");
    const Elem na = subfield_norm(tower, alpha0, m);
    switch (variant) {
    case EtaVariant::c1: {
        require(m1 >= 1 && m % m1 == 0, ErrorCode::BadTower, "m1 must divide m");
        const Elem sign = signed_one(F, std::uint64_t{m} * (m - d + 1));
        return na != F.mul(sign, F.pow(subfield_norm(tower, eta, m1), m / m1));
    }
    case EtaVariant::c2: {
        const Elem sign = signed_one(F, std::uint64_t{m} * (m - d + 1));
        return na != F.mul(sign, subfield_norm(tower, eta, m));
    }
    case EtaVariant::wedderburn: {
        const Elem sign = signed_one(F, m);
        const Elem ne = subfield_norm(tower, eta, m);
        return ne != sign && ne != F.mul(sign, na);
    }
    }
    return false;
}

TwistedCodes construction1(const Construction1Params& p) { return build_twisted(resolve_c1(p)); }

Construction2Params lift_to_construction2(const Construction1Params& p) {
    auto in = resolve_c1(p);
    return Construction2Params{in.tower, in.m1, in.n, in.d, in.W, in.W1, in.S, in.eta};
}

TwistedCodes construction2(const Construction2Params& p) {
    require(p.tower != nullptr, ErrorCode::BadParameters, "missing tower");
    const Tower& T = *p.tower;
    const Field& F = T.F();
    const std::size_t m = T.m();
    check_twisted_shape(T, p.m1, p.n, p.d);
    require(p.eta < F.size(), ErrorCode::BadParameters, "eta outside GF(q^m)");
    const std::size_t len = p.n - p.d + 1;

    const Subspace w = element_span(T, p.W);
    const Subspace w1 = element_span(T, p.W1);
    std::vector<Vec> svecs;
    for (const auto& s : p.S) {
        require(s.size() == len, ErrorCode::BadParameters, "S tuples must have n - d + 1 entries");
        Vec v;
        for (Elem a : s) {
            require(a < F.size(), ErrorCode::BadParameters, "S entry outside GF(q^m)");
            const auto c = T.coords(a);
            v.insert(v.end(), c.begin(), c.end());
        }
        svecs.push_back(std::move(v));
    }
    const Subspace sspace = Subspace::span(T.base(), m * len, svecs);
    require(w.dim() == m - p.n, ErrorCode::P1Violated, "dim W must be m - n");
    require(w1.dim() == m - p.m1, ErrorCode::P1Violated, "dim W1 must be m - m1");
    require(sspace.dim() == p.m1 * len, ErrorCode::P1Violated, "dim S must be m1 (n - d + 1)");

    std::vector<std::vector<Elem>> sbasis;
    for (const auto& v : sspace.basis()) {
        std::vector<Elem> a;
        for (std::size_t i = 0; i < len; ++i)
            a.push_back(T.from_coords(std::span<const Elem>(v).subspan(i * m, m)));
        sbasis.push_back(std::move(a));
    }
    for (const auto& a : sbasis)
        for (const auto& wv : w1.basis()) {
            const Elem x = T.from_coords(wv);
            Elem acc = 0;
            for (std::size_t i = 0; i < len; ++i) acc = F.add(acc, F.mul(a[i], T.frobenius(x, static_cast<std::int64_t>(i))));
            acc = F.add(acc, F.mul(F.mul(p.eta, a[0]), T.frobenius(x, static_cast<std::int64_t>(len))));
            require(w.contains(T.coords(acc)), ErrorCode::P2Violated, "an S generator maps W1 outside W");
        }

    const Elem alpha0 = lp_annihilator(p.tower, p.W).coeff(0);
    require(eta_admissible(T, p.m1, p.d, alpha0, p.eta, EtaVariant::c2), ErrorCode::EtaConditionViolated,
            "norm condition fails for eta = " + F.element_text(p.eta));

    TwistedInput in{p.tower, p.m1, p.n, p.d, as_elements(T, w.basis()), as_elements(T, w1.basis()), std::move(sbasis), p.eta};
    return build_twisted(in);
}

TwistedCodes subtract_many(const FieldPtr& base, std::uint32_t mu, std::uint32_t l) {
    require(mu >= 1 && l >= 2, ErrorCode::BadParameters, "need mu >= 1 and l >= 2");
    const auto tower = Tower::make(base, mu * l);
    const Tower& T = *tower;
    TwistedInput in;
    in.tower = tower;
    in.m1 = mu;
    in.n = std::size_t{mu} * (l - 1);
    in.d = mu;
    in.W = subfield_basis(T, mu);
    in.W1 = trace_kernel_basis(T, mu);
    in.eta = 0;
    const std::size_t len = in.n - in.d + 1;
    for (Elem a0 : in.W1) {
        std::vector<Elem> a(len, 0);
        Elem acc = 0;
        for (std::size_t j = 0; j * mu < len; ++j) {
            acc = T.F().add(acc, T.frobenius(a0, static_cast<std::int64_t>(j * mu)));
            a[j * mu] = acc;
        }
        in.S.push_back(std::move(a));
    }
    return build_twisted(in);
}

bool subtract_many_identity_holds(const TwistedCodes& t, std::uint32_t mu) {
    const auto& tower = t.A.tower();
    const LinPoly tr = lp_trace_poly(tower, mu);
    return std::all_of(t.S.begin(), t.S.end(), [&](const std::vector<Elem>& a) {
        return lp_compose(t.A, LinPoly(tower, a)) == tr.scaled(tower->F().neg(a[0]));
    });
}

WedderburnCode wedderburn_code(const TowerPtr& tower, std::size_t n, std::optional<Elem> eta,
                               std::optional<std::vector<Elem>> W) {
    require(tower != nullptr, ErrorCode::BadParameters, "missing tower");
    const Tower& T = *tower;
    const Field& F = T.F();
    const std::uint32_t m = T.m();
    require(2 <= n && n < m, ErrorCode::BadParameters, "need 2 <= n < m");
    require(m % n != 0, ErrorCode::BadParameters, "n must not divide m");

    WedderburnCode out{RankCode::linear(T.base(), 1, 1, 1, {}), LinPoly(tower), 0, 0, {}};
    if (W) {
        const Subspace w = element_span(T, *W);
        require(w.dim() == m - n, ErrorCode::BadParameters, "W must have dimension m - n");
        out.W = as_elements(T, w.basis());
    } else {
        for (std::uint32_t j = 0; j < m - n; ++j) out.W.push_back(T.basis(j));
    }
    out.A = lp_annihilator(tower, out.W);
    out.alpha0 = out.A.coeff(0);
    if (eta) {
        require(*eta < F.size(), ErrorCode::BadParameters, "eta outside GF(q^m)");
        require(eta_admissible(T, 0, n, out.alpha0, *eta, EtaVariant::wedderburn), ErrorCode::EtaConditionViolated,
                "norm condition fails for eta = " + F.element_text(*eta));
        out.eta = *eta;
    } else {
        Elem e = 0;
        while (!eta_admissible(T, 0, n, out.alpha0, e, EtaVariant::wedderburn)) ++e; // 0 is admissible
        out.eta = e;
    }

    std::vector<Elem> e_basis;
    for (std::uint32_t j = 0; j < m; ++j) e_basis.push_back(T.basis(j));
    const auto f_basis = lp_image_basis(out.A);
    std::vector<Matrix> gens;
    for (std::uint32_t j = 0; j < m; ++j)
        gens.push_back(lp_to_matrix(twisted_poly(out.A, {T.basis(j)}, out.eta), e_basis, f_basis));
    out.C = RankCode::linear(T.base(), m, n, n, std::move(gens));
    return out;
}

// ---------------------------------------------------------------------------------------------------------

RankCode product(const RankCode& top, const RankCode& bottom, std::uint64_t cap) {
    require(top.F().same_as(bottom.F()), ErrorCode::ParamMismatch, "codes over different fields");
    require(top.n() == bottom.n() && top.d() == bottom.d(), ErrorCode::ParamMismatch, "codes differ in n or d");
    require(top.n() <= top.m() && bottom.n() <= bottom.m(), ErrorCode::BadParameters, "need n <= m' and n <= m''");
    require(is_mrd(top, cap), ErrorCode::NotMRDInput, "top code is not MRD");
    require(is_mrd(bottom, cap), ErrorCode::NotMRDInput, "bottom code is not MRD");
    const std::size_t m = top.m() + bottom.m();
    const Matrix zt(top.field(), top.m(), top.n()), zb(bottom.field(), bottom.m(), bottom.n());
    if (top.is_linear() && bottom.is_linear()) {
        std::vector<Matrix> basis;
        for (const auto& b : top.body()) basis.push_back(stack(b, zb));
        for (const auto& b : bottom.body()) basis.push_back(stack(zt, b));
        return RankCode::linear(top.field(), m, top.n(), top.d(), std::move(basis));
    }
    require(top.size() <= cap / std::max<std::uint64_t>(bottom.size(), 1), ErrorCode::TooLarge,
            "product exceeds the member cap");
    std::vector<Matrix> words;
    for (const auto& y : bottom.members(cap))
        for (const auto& x : top.members(cap)) words.push_back(stack(x, y));
    return RankCode::explicit_set(top.field(), m, top.n(), top.d(), std::move(words));
}

RankCode product_switched(const RankCode& bottom, const std::vector<RankCode>& family, std::uint64_t cap) {
    require(is_mrd(bottom, cap), ErrorCode::NotMRDInput, "bottom code is not MRD");
    const auto lower = bottom.members(cap);
    require(family.size() == lower.size(), ErrorCode::FamilyIncomplete, "need one code per member of C''");
    const CodeParams p0 = family.front().params();
    require(p0.n == bottom.n() && p0.d == bottom.d() && family.front().F().same_as(bottom.F()), ErrorCode::ParamMismatch,
            "family parameters differ from C''");
    std::uint64_t total = 0;
    for (const auto& c : family) {
        require(c.params() == p0 && c.F().same_as(bottom.F()), ErrorCode::ParamMismatch, "family codes differ in parameters");
        require(is_mrd(c, cap), ErrorCode::NotMRDInput, "family member is not MRD");
        total += c.size();
        require(total <= cap, ErrorCode::TooLarge, "switched product exceeds the member cap");
    }
    std::vector<Matrix> words;
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (const auto& x : family[i].members(cap)) words.push_back(stack(x, lower[i]));
    return RankCode::explicit_set(bottom.field(), p0.m + bottom.m(), bottom.n(), bottom.d(), std::move(words));
}

} // namespace mrd
