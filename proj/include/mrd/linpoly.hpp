#pragma once

// Linearized polynomials L(x) = sum c_i x^{q^i} over GF(q^m), kept reduced (q-degree < m) since only the
// evaluation map on GF(q^m) matters.

#include <cstdint>
#include <string>
#include <vector>

#include "mrd/field.hpp"
#include "mrd/matrix.hpp"

namespace mrd {

class LinPoly {
  public:
    explicit LinPoly(TowerPtr tower);
    /// Coefficients c_0, c_1, ...; any length, exponents folded mod m.
    LinPoly(TowerPtr tower, const std::vector<Elem>& coeffs);
    static LinPoly identity(TowerPtr tower) { return monomial(std::move(tower), 1, 0); }
    static LinPoly monomial(TowerPtr tower, Elem c, std::int64_t i);

    const TowerPtr& tower() const noexcept { return tower_; }
    const Tower& T() const noexcept { return *tower_; }
    /// Always m entries.
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    Elem coeff(std::size_t i) const noexcept { return c_[i]; }
    /// Largest i with c_i != 0, or -1 for the zero polynomial.
    int qdegree() const noexcept;
    bool is_zero() const noexcept { return qdegree() < 0; }

    LinPoly& operator+=(const LinPoly& o);
    LinPoly& operator-=(const LinPoly& o);
    friend LinPoly operator+(LinPoly a, const LinPoly& b) { return a += b; }
    friend LinPoly operator-(LinPoly a, const LinPoly& b) { return a -= b; }
    /// c * L(x)
    LinPoly scaled(Elem c) const;

    /// "q-poly: c0;c1;...;ck" up to the q-degree ("q-poly: 0" for zero).
    std::string text() const;

    friend bool operator==(const LinPoly& a, const LinPoly& b) {
        return a.tower_->same_as(*b.tower_) && a.c_ == b.c_;
    }

  private:
    TowerPtr tower_;
    std::vector<Elem> c_;
};

Elem lp_eval(const LinPoly& L, Elem x);
/// (L1 o L2)(x) = L1(L2(x)).
LinPoly lp_compose(const LinPoly& L1, const LinPoly& L2);
/// Monic subspace polynomial of the GF(q)-span of `gens` (elements of GF(q^m)).
LinPoly lp_annihilator(TowerPtr tower, const std::vector<Elem>& gens);

/// GF(q)-matrix of L in the basis t^0..t^{m-1}: row i holds the coordinates of L(t^i).
std::vector<Vec> lp_coordinate_rows(const LinPoly& L);
/// Kernel as a subspace of coordinate space GF(q)^m.
Subspace lp_kernel(const LinPoly& L);
/// Image basis (reduced echelon in coordinates), returned as field elements.
std::vector<Elem> lp_image_basis(const LinPoly& L);

/// M with L(e_i) = sum_j M_ij f_j. Throws NotABasis if e is not a basis of GF(q^m) or f is dependent,
/// ImageNotContained if some L(e_i) leaves span(f).
Matrix lp_to_matrix(const LinPoly& L, const std::vector<Elem>& e, const std::vector<Elem>& f);

/// B with B o A1 == A. Throws NotDivisible.
LinPoly lp_right_divide(const LinPoly& A, const LinPoly& A1);
/// Tr_{q^m/q^{m1}} as x + x^{q^{m1}} + ... + x^{q^{m-m1}}.
LinPoly lp_trace_poly(TowerPtr tower, std::uint32_t m1);

/// Subspace of GF(q)^m spanned by the coordinate vectors of the given elements.
Subspace element_span(const Tower& tower, const std::vector<Elem>& elems);
std::vector<Elem> subspace_elements(const Tower& tower, const Subspace& s);

} // namespace mrd
