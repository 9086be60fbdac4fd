#include "mrd/linpoly.hpp"

#include "mrd/error.hpp"

namespace mrd {

namespace {

std::size_t fold(const Tower& t, std::int64_t i) {
    const std::int64_t m = t.m();
    return static_cast<std::size_t>(((i % m) + m) % m);
}

void check_same_tower(const LinPoly& a, const LinPoly& b) {
    require(a.T().same_as(b.T()), ErrorCode::FieldMismatch, "linearized polynomials over different fields");
}

} // namespace

LinPoly::LinPoly(TowerPtr tower) : tower_(std::move(tower)), c_(tower_->m(), 0) {}

LinPoly::LinPoly(TowerPtr tower, const std::vector<Elem>& coeffs) : LinPoly(std::move(tower)) {
    const Field& F = tower_->F();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        auto& slot = c_[fold(*tower_, static_cast<std::int64_t>(i))];
        slot = F.add(slot, coeffs[i]);
    }
}

LinPoly LinPoly::monomial(TowerPtr tower, Elem c, std::int64_t i) {
    LinPoly p(std::move(tower));
    p.c_[fold(*p.tower_, i)] = c;
    return p;
}

int LinPoly::qdegree() const noexcept {
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

LinPoly& LinPoly::operator+=(const LinPoly& o) {
    check_same_tower(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = T().F().add(c_[i], o.c_[i]);
    return *this;
}

LinPoly& LinPoly::operator-=(const LinPoly& o) {
    check_same_tower(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = T().F().sub(c_[i], o.c_[i]);
    return *this;
}

LinPoly LinPoly::scaled(Elem c) const {
    LinPoly out = *this;
    for (auto& x : out.c_) x = T().F().mul(c, x);
    return out;
}

std::string LinPoly::text() const {
    const int k = qdegree();
    if (k < 0) return "q-poly: 0";
    std::string s = "q-poly: ";
    for (int i = 0; i <= k; ++i) {
        if (i) s.push_back(';');
        s += T().F().element_text(c_[static_cast<std::size_t>(i)]);
    }
    return s;
}

Elem lp_eval(const LinPoly& L, Elem x) {
    const Tower& t = L.T();
    const Field& F = t.F();
    require(x < F.size(), ErrorCode::FieldMismatch, "point outside the polynomial's field");
    Elem acc = 0;
    Elem xp = x;
    for (std::size_t i = 0; i < t.m(); ++i) {
        acc = F.add(acc, F.mul(L.coeff(i), xp));
        xp = t.frobenius(xp, 1);
    }
    return acc;
}

LinPoly lp_compose(const LinPoly& L1, const LinPoly& L2) {
    check_same_tower(L1, L2);
    const Tower& t = L1.T();
    const Field& F = t.F();
    const std::size_t m = t.m();
    std::vector<Elem> out(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (L1.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (L2.coeff(j) == 0) continue;
            const Elem term = F.mul(L1.coeff(i), t.frobenius(L2.coeff(j), static_cast<std::int64_t>(i)));
            auto& slot = out[(i + j) % m];
            slot = F.add(slot, term);
        }
    }
    return LinPoly(L1.tower(), out);
}

LinPoly lp_annihilator(TowerPtr tower, const std::vector<Elem>& gens) {
    const Tower& t = *tower;
    const Field& F = t.F();
    LinPoly A = LinPoly::identity(tower);
    const LinPoly frob = LinPoly::monomial(tower, 1, 1);
    for (Elem u : gens) {
        const Elem au = lp_eval(A, u);
        if (au == 0) continue; // u already in the span
        // A' = A^q - A(u)^{q-1} A vanishes on span + <u>.
        A = lp_compose(frob, A) - A.scaled(F.pow(au, t.q() - 1));
    }
    return A;
}

std::vector<Vec> lp_coordinate_rows(const LinPoly& L) {
    const Tower& t = L.T();
    std::vector<Vec> rows;
    rows.reserve(t.m());
    for (std::uint32_t i = 0; i < t.m(); ++i) rows.push_back(t.coords(lp_eval(L, t.basis(i))));
    return rows;
}

Subspace lp_kernel(const LinPoly& L) {
    const Tower& t = L.T();
    return Subspace::span(t.base(), t.m(), linalg::left_kernel(t.K(), lp_coordinate_rows(L), t.m()));
}

std::vector<Elem> lp_image_basis(const LinPoly& L) {
    const Tower& t = L.T();
    const auto e = linalg::rref(t.K(), lp_coordinate_rows(L), t.m());
    std::vector<Elem> out;
    for (const auto& r : e.rows) out.push_back(t.from_coords(r));
    return out;
}

Matrix lp_to_matrix(const LinPoly& L, const std::vector<Elem>& e, const std::vector<Elem>& f) {
    const Tower& t = L.T();
    const Field& K = t.K();
    std::vector<Vec> ec, fc;
    for (Elem x : e) ec.push_back(t.coords(x));
    for (Elem y : f) fc.push_back(t.coords(y));
    require(e.size() == t.m() && linalg::rank(K, ec, t.m()) == t.m(), ErrorCode::NotABasis,
            "domain basis is not a basis of the extension field");
    require(linalg::rank(K, fc, t.m()) == f.size(), ErrorCode::NotABasis, "image basis is dependent");
    Matrix M(t.base(), e.size(), f.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto sol = linalg::solve(K, fc, t.coords(lp_eval(L, e[i])), t.m());
        require(sol.has_value(), ErrorCode::ImageNotContained, "L(e_i) is outside the span of the image basis");
        for (std::size_t j = 0; j < f.size(); ++j) M(i, j) = (*sol)[j];
    }
    return M;
}

LinPoly lp_right_divide(const LinPoly& A, const LinPoly& A1) {
    check_same_tower(A, A1);
    const Tower& t = A.T();
    const Field& F = t.F();
    const int k1 = A1.qdegree();
    require(k1 >= 0, ErrorCode::NotDivisible, "division by the zero polynomial");
    const Elem lead1 = A1.coeff(static_cast<std::size_t>(k1));
    LinPoly rem = A;
    LinPoly B(A.tower());
    for (int k = rem.qdegree(); k >= k1; k = rem.qdegree()) {
        const int s = k - k1;
        const Elem c = F.div(rem.coeff(static_cast<std::size_t>(k)), t.frobenius(lead1, s));
        const LinPoly term = LinPoly::monomial(A.tower(), c, s);
        B += term;
        rem -= lp_compose(term, A1);
    }
    require(rem.is_zero() && lp_compose(B, A1) == A, ErrorCode::NotDivisible, "A is not a right multiple of A1");
    return B;
}

LinPoly lp_trace_poly(TowerPtr tower, std::uint32_t m1) {
    require(m1 >= 1 && tower->m() % m1 == 0, ErrorCode::NotASubfield, "trace target degree must divide m");
    LinPoly p(tower);
    for (std::uint32_t i = 0; i < tower->m(); i += m1) p += LinPoly::monomial(tower, 1, i);
    return p;
}

Subspace element_span(const Tower& tower, const std::vector<Elem>& elems) {
    std::vector<Vec> rows;
    for (Elem x : elems) rows.push_back(tower.coords(x));
    return Subspace::span(tower.base(), tower.m(), std::move(rows));
}

std::vector<Elem> subspace_elements(const Tower& tower, const Subspace& s) {
    std::vector<Elem> out;
    for (const auto& v : s.elements()) out.push_back(tower.from_coords(v));
    return out;
}

} // namespace mrd
