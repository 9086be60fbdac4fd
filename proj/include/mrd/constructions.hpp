#pragma once

// Code constructions: Gabidulin codes, twisted subspace-polynomial codes with row-supported MRD subcodes,
// the subtract-many family, the square Wedderburn-type code, and (switched) products.

#include <cstdint>
#include <optional>
#include <vector>

#include "mrd/code.hpp"
#include "mrd/field.hpp"
#include "mrd/linpoly.hpp"

namespace mrd {

/// Linear span of (g_1^{q^i}, ..., g_n^{q^i}), i < k, over GF(q^m). Column j of a codeword holds the
/// coordinates of L(g_j). Generators default to t^0..t^{n-1}. Throws DependentGenerators, BadParameters.
RankCode gabidulin(const TowerPtr& tower, std::size_t n, std::size_t k,
                   std::optional<std::vector<Elem>> generators = std::nullopt);

enum class EtaVariant { c1, c2, wedderburn };

/// Norm inequality attached to each family. m1 is only read for c1 (eta must then lie in GF(q^{m1})).
///   c1:         N_{q^m/q}(alpha0) != (-1)^{m(m-d+1)} N_{q^{m1}/q}(eta)^{m/m1}
///   c2:         N_{q^m/q}(alpha0) != (-1)^{m(m-d+1)} N_{q^m/q}(eta)
///   wedderburn: N_{q^m/q}(eta) not in {(-1)^m, (-1)^m N_{q^m/q}(alpha0)}
bool eta_admissible(const Tower& tower, std::uint32_t m1, std::size_t d, Elem alpha0, Elem eta, EtaVariant variant);

/// N_{q^s/q}(x) for x in the subfield GF(q^s) of the tower.
Elem subfield_norm(const Tower& tower, Elem x, std::uint32_t s);

struct Construction1Params {
    TowerPtr tower; // GF(q^m) over GF(q)
    std::uint32_t m1 = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    /// GF(q)-generators of W; default: ker Tr_{q^m/q^{m1}} completed pivot-greedy to dimension m-n.
    std::optional<std::vector<Elem>> W;
    /// Element of GF(q^{m1}) (as a member of GF(q^m)); default: first admissible in GF(q^{m1}) order.
    std::optional<Elem> eta;
};

struct Construction2Params {
    TowerPtr tower;
    std::uint32_t m1 = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<Elem> W;
    std::vector<Elem> W1;
    /// GF(q)-generators of S, each a tuple (a_0..a_{n-d}).
    std::vector<std::vector<Elem>> S;
    Elem eta = 0;
};

/// Everything a twisted construction produced, including the choices it made.
struct TwistedCodes {
    RankCode C;  // in B_q(m,n)
    RankCode C0; // in B_q(m1,n), zero rows dropped
    LinPoly A;
    Elem alpha0 = 0;
    Elem eta = 0;
    std::vector<Elem> W;       // reduced echelon basis
    std::vector<Elem> W1;      // reduced echelon basis, also the last m-m1 entries of e_basis
    std::vector<Elem> e_basis; // domain basis (matrix rows)
    std::vector<Elem> f_basis; // basis of Im(A) (matrix columns)
    /// GF(q)-basis of the coefficient tuples behind C0, in the order of C0's generators.
    std::vector<std::vector<Elem>> S;
};

/// Throws BadParameters, BadTower (m1 does not divide m), BadSubspaceChain (W1 not in W),
/// EtaConditionViolated.
TwistedCodes construction1(const Construction1Params& p);
/// Throws BadParameters, P1Violated, P2Violated, EtaConditionViolated.
TwistedCodes construction2(const Construction2Params& p);
/// Construction 1 data restated as Construction 2 parameters (S = GF(q^{m1})^{n-d+1}).
Construction2Params lift_to_construction2(const Construction1Params& p);

/// m = mu*l, m1 = mu, n = mu(l-1), d = mu; W = GF(q^mu); W1 = ker Tr_{q^m/q^mu};
/// subcode tuples a_{j mu} = sum_{t<=j} a0^{q^{t mu}}, a0 in W1.
TwistedCodes subtract_many(const FieldPtr& base, std::uint32_t mu, std::uint32_t l);
/// (x^{q^mu} - x) o P_{a0} == -a0 Tr_{q^m/q^mu}(x) for every subcode generator, compared as polynomials.
bool subtract_many_identity_holds(const TwistedCodes& t, std::uint32_t mu);

struct WedderburnCode {
    RankCode C;
    LinPoly A;
    Elem alpha0 = 0;
    Elem eta = 0;
    std::vector<Elem> W;
};
/// {A o (a0 x + eta a0 x^q)} with d = n, n not dividing m. W defaults to span{t^0..t^{m-n-1}} and eta to the
/// first admissible element. Throws BadParameters, EtaConditionViolated.
WedderburnCode wedderburn_code(const TowerPtr& tower, std::size_t n, std::optional<Elem> eta = std::nullopt,
                               std::optional<std::vector<Elem>> W = std::nullopt);

/// {[X'; X''] : X' in C', X'' in C''}. Throws ParamMismatch, BadParameters (n > m' or n > m''), NotMRDInput.
RankCode product(const RankCode& top, const RankCode& bottom, std::uint64_t cap = Caps{}.members);
/// {[X'; X''] : X'' in C'', X' in family[i]} where X'' is the i-th member of C'' in canonical order.
/// Throws FamilyIncomplete, ParamMismatch, NotMRDInput.
RankCode product_switched(const RankCode& bottom, const std::vector<RankCode>& family,
                          std::uint64_t cap = Caps{}.members);

} // namespace mrd
