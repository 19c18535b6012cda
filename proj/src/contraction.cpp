#include "lef/contraction.hpp"

#include <sstream>
#include <stdexcept>

namespace lef {

namespace {

void require_invertible_diag(const std::vector<Rational>& d, const char* who) {
    for (const Rational& x : d)
        if (x == 0) throw std::invalid_argument(std::string(who) + ": zero diagonal entry");
}

struct AdjointBasis {
    std::vector<std::pair<int, int>> offdiag;  // e_ij, i != j
    int cartan_dim = 0;                        // Ad acts trivially there
};

AdjointBasis basis_for(const RootDatum& rd, Subspace s) {
    AdjointBasis b;
    const int n = rd.n;
    const int full_cartan = (rd.family == Family::GLn) ? n : n - 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool upper = i < j;
            bool take = false;
            switch (s) {
                case Subspace::N: take = upper; break;
                case Subspace::NBar: take = !upper; break;
                case Subspace::G: take = true; break;
                case Subspace::AMN: take = upper; break;
            }
            if (take) b.offdiag.emplace_back(i, j);
        }
    if (s == Subspace::G || s == Subspace::AMN) b.cartan_dim = full_cartan;
    return b;
}

}  // namespace

LeviPair LeviPair::make(const PadicContext& ctx, RootDatum rd, std::vector<Rational> a_diag,
                        std::vector<Rational> m_diag, bool elliptic_model) {
    if (static_cast<int>(a_diag.size()) != rd.n || static_cast<int>(m_diag.size()) != rd.n)
        throw std::invalid_argument("LeviPair: diagonal length must match the datum rank");
    require_invertible_diag(a_diag, "LeviPair(a)");
    require_invertible_diag(m_diag, "LeviPair(m)");
    if (elliptic_model) {
        for (const Rational& u : m_diag)
            if (!(valuation(ctx, u) == Val(0)))
                throw std::invalid_argument("LeviPair: elliptic model requires unit valuations in m");
    }
    LeviPair p{ctx, std::move(rd), std::move(a_diag), std::move(m_diag), elliptic_model};
    return p;
}

TorusElement LeviPair::a_torus() const {
    return TorusElement::from_diagonal(rd, ctx, a_diag);
}

std::vector<Rational> LeviPair::am_diag() const {
    std::vector<Rational> d(a_diag.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a_diag[i] * m_diag[i];
    return d;
}

AbsValueSpectrum diagonal_adjoint_spectrum(const PadicContext& ctx, const RootDatum& rd,
                                           const std::vector<Rational>& diag, Subspace s) {
    if (static_cast<int>(diag.size()) != rd.n)
        throw std::invalid_argument("diagonal_adjoint_spectrum: length mismatch");
    require_invertible_diag(diag, "diagonal_adjoint_spectrum");
    AdjointBasis b = basis_for(rd, s);
    const std::size_t dim = b.offdiag.size() + b.cartan_dim;
    RatMatrix ad(dim, dim);
    for (std::size_t k = 0; k < b.offdiag.size(); ++k) {
        auto [i, j] = b.offdiag[k];
        ad(k, k) = diag[i] / diag[j];
    }
    for (std::size_t k = b.offdiag.size(); k < dim; ++k) ad(k, k) = 1;
    return eigen_abs_values(ctx, ad);
}

AbsValueSpectrum adjoint_spectrum(const LeviPair& p, Subspace s) {
    return diagonal_adjoint_spectrum(p.ctx, p.rd, p.am_diag(), s);
}

Rational lambda_am(const LeviPair& p) {
    AbsValueSpectrum on_nbar = diagonal_adjoint_spectrum(p.ctx, p.rd, p.a_diag, Subspace::NBar);
    AbsValueSpectrum on_g = diagonal_adjoint_spectrum(p.ctx, p.rd, p.m_diag, Subspace::G);
    LambdaExtremes la = lambda_min_max(on_nbar);
    LambdaExtremes lm = lambda_min_max(on_g);
    return la.min_exponent - 2 * lm.max_exponent;
}

bool in_AM_tilde(const LeviPair& p) {
    return lambda_am(p) > 0;
}

MAReport check_MA_properties(const std::vector<LeviPair>& samples) {
    MAReport rep;
    rep.samples = samples.size();
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        const LeviPair& p = samples[idx];
        const bool a_minus = in_A_minus(p.a_torus(), p.rd);
        const bool tilde = in_AM_tilde(p);

        if (a_minus && p.elliptic_model) {
            ++rep.contraction_cases;
            if (!tilde) {
                std::ostringstream os;
                os << "sample " << idx << ": a in A^- with elliptic m but lambda(am) <= 1";
                rep.failures.push_back(os.str());
            }
        }
        if (tilde) {
            ++rep.chamber_cases;
            if (!a_minus) {
                std::ostringstream os;
                os << "sample " << idx << ": am in (AM)~ but a not in A^-";
                rep.failures.push_back(os.str());
            }
            ++rep.separation_cases;
            AbsValueSpectrum nbar = adjoint_spectrum(p, Subspace::NBar);
            AbsValueSpectrum amn = adjoint_spectrum(p, Subspace::AMN);
            // min |.| on nbar is q^{-max valuation}; it must strictly exceed
            // max |.| on a+m+n, which is q^{-min valuation}.
            if (!(nbar.max_valuation() < amn.min_valuation())) {
                std::ostringstream os;
                os << "sample " << idx << ": eigenvalue separation fails (nbar max val "
                   << nbar.max_valuation() << " vs a+m+n min val " << amn.min_valuation() << ")";
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

DetIdentity det_identity(const LeviPair& p) {
    if (!in_A_minus(p.a_torus(), p.rd))
        throw std::domain_error("det_identity: a is not in A^-");
    if (!p.elliptic_model)
        throw std::domain_error("det_identity: m is not in the elliptic model");

    std::vector<Rational> d = p.am_diag();
    Rational det = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            det *= Rational(1) - d[i] / d[j];
        }
    Val v = valuation(p.ctx, det);
    if (v.is_infinite()) throw std::domain_error("det_identity: 1 - Ad(am) singular on n + nbar");

    DetIdentity res;
    res.det_abs = rational_power(p.ctx.q, -v.finite());
    // |a^{-2 rho}| = Delta_P(a)^{-1}
    res.modular_abs = Rational(1) / modular_delta(p.a_torus(), p.rd);
    return res;
}

}  // namespace lef
