#pragma once

#include <string>
#include <vector>

#include "lef/padic.hpp"
#include "lef/root_datum.hpp"

namespace lef {

// Ad(am)-stable subspaces of the matrix Lie algebra for the upper-triangular
// Borel: the nilpotent radical n (strictly upper), its opposite (strictly
// lower), the full algebra, and a + m + n.
enum class Subspace { N, NBar, G, AMN };

// A pair am with a in the diagonal torus and m in the Levi of the Borel,
// both stored by their diagonal entries. The elliptic model for m is the
// computable shadow of "contained in a compact torus": every eigenvalue
// absolute value of m equals 1, i.e. all entries have valuation 0.
struct LeviPair {
    PadicContext ctx;
    RootDatum rd;
    std::vector<Rational> a_diag;
    std::vector<Rational> m_diag;
    bool elliptic_model = false;

    static LeviPair make(const PadicContext& ctx, RootDatum rd, std::vector<Rational> a_diag,
                         std::vector<Rational> m_diag, bool elliptic_model);

    TorusElement a_torus() const;
    std::vector<Rational> am_diag() const;
};

// E(Ad(d) | subspace) for a diagonal d: Ad(d) e_ij = (d_i/d_j) e_ij, and the
// Cartan part is fixed. For SL_n / PGL2 the center is excluded by using the
// trace-zero Cartan coordinates.
AbsValueSpectrum diagonal_adjoint_spectrum(const PadicContext& ctx, const RootDatum& rd,
                                           const std::vector<Rational>& diag, Subspace s);

AbsValueSpectrum adjoint_spectrum(const LeviPair& p, Subspace s);

// lambda(am) = lambda_min(a | nbar) / lambda_max(m | g)^2, returned as the
// exponent e with lambda(am) = q^e.
Rational lambda_am(const LeviPair& p);

// (AM)~ = { am : lambda(am) > 1 }
bool in_AM_tilde(const LeviPair& p);

struct MAReport {
    std::size_t samples = 0;
    std::size_t contraction_cases = 0;  // a in A^-, m elliptic => in (AM)~
    std::size_t chamber_cases = 0;      // in (AM)~ => a in A^-
    std::size_t separation_cases = 0;   // eigenvalues on nbar strictly dominate a+m+n
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Checks, per sample: (1) a in A^- and m elliptic implies membership in
// (AM)~; (2) membership in (AM)~ implies a in A^-; (3) for members of (AM)~
// the separation inequality min |Ad(am)|_{nbar}| > max |Ad(am)|_{a+m+n}|.
MAReport check_MA_properties(const std::vector<LeviPair>& samples);

struct DetIdentity {
    Rational det_abs;      // |det(1 - Ad(am) | n + nbar)|
    Rational modular_abs;  // |a^{-2 rho}|
    bool equal() const { return det_abs == modular_abs; }
};

// The ultrametric determinant identity: for a in A^- and unit-spectrum m
// the eigenvalues of Ad(am) on n have absolute value < 1 and on nbar > 1,
// so |det(1 - Ad(am) | n + nbar)| = |det(a | nbar)| = |a^{-2 rho}|.
// Preconditions are enforced; violations throw std::domain_error.
DetIdentity det_identity(const LeviPair& p);

}  // namespace lef
