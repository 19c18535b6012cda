#include "doctest.h"

#include "lef/contraction.hpp"
#include "lef/sampling.hpp"

using namespace lef;

namespace {

AbsValueSpectrum single(const Rational& s, long mult = 1) {
    AbsValueSpectrum spec;
    spec.add(s, mult);
    return spec;
}

LeviPair gl2_pair(long q, std::vector<Rational> a, std::vector<Rational> m, bool elliptic) {
    PadicContext ctx(q);
    return LeviPair::make(ctx, RootDatum::gl(2), std::move(a), std::move(m), elliptic);
}

}  // namespace

TEST_CASE("adjoint spectra on the named subspaces") {
    // Ad(a) e_21 = (a_2/a_1) e_21: valuation -2 for a = diag(9, 1) at q = 3
    LeviPair p = gl2_pair(3, {Rational(9), Rational(1)}, {Rational(1), Rational(1)}, true);
    CHECK(adjoint_spectrum(p, Subspace::NBar) == single(Rational(-2)));
    CHECK(adjoint_spectrum(p, Subspace::N) == single(Rational(2)));

    AbsValueSpectrum amn = adjoint_spectrum(p, Subspace::AMN);
    AbsValueSpectrum expect_amn;
    expect_amn.add(Rational(0), 2);  // Cartan
    expect_amn.add(Rational(2), 1);  // e_12
    CHECK(amn == expect_amn);

    LeviPair id = gl2_pair(3, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, true);
    for (Subspace s : {Subspace::N, Subspace::NBar, Subspace::G, Subspace::AMN}) {
        for (const auto& [val, mult] : adjoint_spectrum(id, s).entries())
            CHECK(val == Rational(0));
    }

    // unit factor in m leaves the valuation untouched: v(u) = 0
    LeviPair pm = gl2_pair(3, {Rational(3), Rational(1)}, {Rational(2, 5), Rational(1)}, true);
    CHECK(adjoint_spectrum(pm, Subspace::N) == single(Rational(1)));
}

TEST_CASE("adjoint spectra exclude the center for SL and PGL2") {
    PadicContext ctx(3);
    LeviPair sl = LeviPair::make(ctx, RootDatum::sl(2), {Rational(3), Rational(1, 3)},
                                 {Rational(1), Rational(1)}, true);
    // sl_2: dim 3 = two off-diagonal lines plus a one-dimensional Cartan
    CHECK(adjoint_spectrum(sl, Subspace::G).dimension() == 3);

    LeviPair gl = gl2_pair(3, {Rational(3), Rational(1)}, {Rational(1), Rational(1)}, true);
    CHECK(adjoint_spectrum(gl, Subspace::G).dimension() == 4);
}

TEST_CASE("lambda(am) exponents") {
    CHECK(lambda_am(gl2_pair(3, {Rational(9), Rational(1)}, {Rational(1), Rational(1)}, true)) ==
          Rational(2));
    CHECK(lambda_am(gl2_pair(3, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, true)) ==
          Rational(0));
    CHECK(lambda_am(gl2_pair(2, {Rational(2), Rational(1)}, {Rational(3), Rational(1)}, true)) ==
          Rational(1));
}

TEST_CASE("lambda exponent is linear in torus powers") {
    PadicContext ctx(3);
    Rng rng(8);
    RootDatum gl3 = RootDatum::gl(3);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Rational> a = random_A_minus_diag(rng, ctx, gl3);
        std::vector<Rational> ones(3, Rational(1));
        LeviPair p1 = LeviPair::make(ctx, gl3, a, ones, true);
        for (long k = 2; k <= 3; ++k) {
            std::vector<Rational> ak(3);
            for (int i = 0; i < 3; ++i) {
                ak[i] = 1;
                for (long t = 0; t < k; ++t) ak[i] *= a[i];
            }
            LeviPair pk = LeviPair::make(ctx, gl3, ak, ones, true);
            CHECK(lambda_am(pk) == Rational(k) * lambda_am(p1));
        }
    }
}

TEST_CASE("membership in (AM)~") {
    CHECK(in_AM_tilde(gl2_pair(3, {Rational(9), Rational(1)}, {Rational(1), Rational(1)}, true)));
    CHECK_FALSE(
        in_AM_tilde(gl2_pair(3, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, true)));
    CHECK_FALSE(
        in_AM_tilde(gl2_pair(3, {Rational(1), Rational(3)}, {Rational(1), Rational(1)}, true)));
}

TEST_CASE("elliptic model validation") {
    PadicContext ctx(3);
    CHECK_THROWS_AS(LeviPair::make(ctx, RootDatum::gl(2), {Rational(3), Rational(1)},
                                   {Rational(3), Rational(1)}, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(LeviPair::make(ctx, RootDatum::gl(2), {Rational(3), Rational(0)},
                                   {Rational(1), Rational(1)}, true),
                    std::invalid_argument);
}

TEST_CASE("MA properties over random samples") {
    Rng rng(2718);
    std::vector<LeviPair> samples;
    for (int i = 0; i < 200; ++i) {
        PadicContext ctx(i % 2 == 0 ? 3 : 2);
        RootDatum rd = (i % 4 < 2) ? RootDatum::gl(2) : RootDatum::gl(3);
        bool in_chamber = i % 5 != 0;
        std::vector<Rational> a = in_chamber ? random_A_minus_diag(rng, ctx, rd)
                                             : random_not_A_minus_diag(rng, ctx, rd);
        samples.push_back(
            LeviPair::make(ctx, rd, a, random_elliptic_diag(rng, ctx, rd.n), true));
    }
    MAReport rep = check_MA_properties(samples);
    CHECK(rep.pass());
    CHECK(rep.samples == 200);
    CHECK(rep.contraction_cases > 0);
    CHECK(rep.chamber_cases > 0);
    CHECK(rep.separation_cases == rep.chamber_cases);
}

TEST_CASE("MA properties are vacuous at the identity") {
    std::vector<LeviPair> samples{
        gl2_pair(3, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, true)};
    MAReport rep = check_MA_properties(samples);
    CHECK(rep.pass());
    CHECK(rep.contraction_cases == 0);
    CHECK(rep.chamber_cases == 0);
}

TEST_CASE("eigenvalue separation on a concrete member") {
    LeviPair p = gl2_pair(3, {Rational(9), Rational(1)}, {Rational(1), Rational(1)}, true);
    AbsValueSpectrum nbar = adjoint_spectrum(p, Subspace::NBar);
    AbsValueSpectrum amn = adjoint_spectrum(p, Subspace::AMN);
    // absolute values: q^2 on nbar strictly above 1 and q^{-2} on a+m+n
    CHECK(nbar.max_valuation() < amn.min_valuation());
}

TEST_CASE("determinant identity") {
    {
        DetIdentity d =
            det_identity(gl2_pair(3, {Rational(3), Rational(1)}, {Rational(1), Rational(1)}, true));
        CHECK(d.det_abs == Rational(3));
        CHECK(d.modular_abs == Rational(3));
        CHECK(d.equal());
    }
    {
        PadicContext ctx(2);
        LeviPair p = LeviPair::make(ctx, RootDatum::gl(3),
                                    {Rational(4), Rational(2), Rational(1)},
                                    {Rational(1), Rational(1), Rational(1)}, true);
        DetIdentity d = det_identity(p);
        CHECK(d.det_abs == Rational(16));
        CHECK(d.equal());
    }
    CHECK_THROWS_AS(
        det_identity(gl2_pair(3, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, true)),
        std::domain_error);
    CHECK_THROWS_AS(det_identity(LeviPair::make(PadicContext(3), RootDatum::gl(2),
                                                {Rational(3), Rational(1)},
                                                {Rational(1, 2), Rational(5)}, false)),
                    std::domain_error);
}

TEST_CASE("determinant identity on SL2 and PGL2") {
    PadicContext ctx(3);
    {
        LeviPair p = LeviPair::make(ctx, RootDatum::sl(2), {Rational(3), Rational(1, 3)},
                                    {Rational(1), Rational(1)}, true);
        DetIdentity d = det_identity(p);
        CHECK(d.equal());
        CHECK(d.modular_abs == Rational(9));  // valuations (1,-1), pairing with 2rho = 2
    }
    {
        LeviPair p = LeviPair::make(ctx, RootDatum::pgl2(), {Rational(9), Rational(3)},
                                    {Rational(2), Rational(2)}, true);
        DetIdentity d = det_identity(p);
        CHECK(d.equal());
        CHECK(d.modular_abs == Rational(3));  // gauged class (1, 0)
    }
}

TEST_CASE("region suite passes") {
    Rng rng(404);
    RegionSuite suite = region_suite(rng, 60);
    CHECK(suite.pass());
    CHECK(suite.det_identity.total == 60);
    CHECK(suite.contrapositive.total >= 50);
}

TEST_CASE("unit-spectrum adjoint extremes are reciprocal") {
    // lambda_max(m|g) * lambda_min(m|g) = 1 for the sampled families: the
    // adjoint eigenvalues d_i/d_j come in reciprocal pairs
    Rng rng(55);
    for (int rep = 0; rep < 40; ++rep) {
        PadicContext ctx(rep % 2 == 0 ? 2 : 5);
        RootDatum rd = (rep % 3 == 0) ? RootDatum::gl(3) : RootDatum::gl(2);
        std::vector<Rational> m(rd.n);
        for (auto& x : m) x = random_with_valuation(rng, ctx, rng.uniform(-3, 3));
        LambdaExtremes e = lambda_min_max(diagonal_adjoint_spectrum(ctx, rd, m, Subspace::G));
        CHECK(e.min_exponent + e.max_exponent == Rational(0));
        CHECK(e.max_exponent >= Rational(0));  // lambda_max always >= 1
    }
}
