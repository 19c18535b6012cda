#include "lef/sampling.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "lef/padic.hpp"

namespace lef {

Rational random_unit(Rng& rng, const PadicContext& ctx) {
    auto coprime = [&]() {
        long x;
        do {
            x = rng.uniform(1, 9);
        } while (x % ctx.q == 0);
        return x;
    };
    long num = coprime();
    long den = coprime();
    if (rng.coin()) num = -num;
    return Rational(num, den);
}

Rational random_with_valuation(Rng& rng, const PadicContext& ctx, long v) {
    return random_unit(rng, ctx) * rational_power(ctx.q, Int(v));
}

namespace {

std::vector<long> decreasing_valuations(Rng& rng, int n) {
    std::vector<long> v(n);
    long cur = rng.uniform(2, 5);
    for (int i = 0; i < n; ++i) {
        v[i] = cur;
        cur -= rng.uniform(1, 3);
    }
    return v;
}

// recentre into the family's gauge; strict inequalities between consecutive
// entries are preserved
std::vector<long> gauge_valuations(const RootDatum& rd, std::vector<long> v) {
    if (rd.family == Family::SLn) {
        long n = rd.n;
        long s = std::accumulate(v.begin(), v.end(), 0L);
        for (auto& x : v) x = n * x - s;
    } else if (rd.family == Family::PGL2) {
        long shift = v.back();
        for (auto& x : v) x -= shift;
    }
    return v;
}

std::vector<Rational> realize_diag(Rng& rng, const PadicContext& ctx,
                                   const std::vector<long>& vals) {
    std::vector<Rational> d(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) d[i] = random_with_valuation(rng, ctx, vals[i]);
    return d;
}

}  // namespace

std::vector<Rational> random_A_minus_diag(Rng& rng, const PadicContext& ctx,
                                          const RootDatum& rd) {
    return realize_diag(rng, ctx, gauge_valuations(rd, decreasing_valuations(rng, rd.n)));
}

std::vector<Rational> random_not_A_minus_diag(Rng& rng, const PadicContext& ctx,
                                              const RootDatum& rd) {
    // break the chamber condition at one simple root
    std::vector<long> v = decreasing_valuations(rng, rd.n);
    int k = static_cast<int>(rng.uniform(0, rd.n - 2));
    v[k + 1] = v[k] + rng.uniform(0, 2);
    return realize_diag(rng, ctx, gauge_valuations(rd, std::move(v)));
}

std::vector<Rational> random_elliptic_diag(Rng& rng, const PadicContext& ctx, int n) {
    std::vector<Rational> d(n);
    for (auto& x : d) x = random_unit(rng, ctx);
    return d;
}

RatMatrix random_conjugated_diagonal(Rng& rng, const PadicContext& ctx, int n,
                                     std::vector<Rational>& diag_out) {
    diag_out.resize(n);
    RatMatrix d(n, n);
    for (int i = 0; i < n; ++i) {
        diag_out[i] = random_with_valuation(rng, ctx, rng.uniform(-4, 4));
        d(i, i) = diag_out[i];
    }
    // unimodular P as a product of shears; the inverse is the product of the
    // inverse shears in reverse order, so both stay integral
    RatMatrix p = RatMatrix::identity(n);
    RatMatrix pinv = RatMatrix::identity(n);
    std::vector<std::array<long, 3>> shears;
    for (int t = 0; t < n + 3; ++t) {
        long i = rng.uniform(0, n - 1);
        long j = rng.uniform(0, n - 1);
        if (i == j) continue;
        long c = rng.coin() ? 1 : -1;
        if (rng.coin()) c *= 2;
        shears.push_back({i, j, c});
    }
    for (const auto& [i, j, c] : shears)
        for (int col = 0; col < n; ++col) p(i, col) += Rational(c) * p(j, col);
    for (auto it = shears.rbegin(); it != shears.rend(); ++it) {
        const auto& [i, j, c] = *it;
        for (int col = 0; col < n; ++col) pinv(i, col) -= Rational(c) * pinv(j, col);
    }
    return p * d * pinv;
}

BettiVector random_betti(Rng& rng, int max_len, long max_entry) {
    int len = static_cast<int>(rng.uniform(1, max_len));
    std::vector<Int> b(len);
    for (auto& x : b) x = rng.uniform(0, max_entry);
    if (b.back() == 0) b.back() = 1;
    return BettiVector(std::move(b));
}

EdgeCharacter random_edge_character(Rng& rng, const GeodesicGraph& g) {
    std::vector<Rational> turns(g.undirected_edges());
    for (auto& t : turns) t = Rational(rng.uniform(1, 719), 720);
    return EdgeCharacter::from_turns(g, turns);
}

SuiteResult chichi_suite(Rng& rng, long cases) {
    SuiteResult res;
    res.total = cases;
    for (long i = 0; i < cases; ++i) {
        BettiVector b = random_betti(rng, 10, 20);
        int r = static_cast<int>(i % 4) + 1;
        if (!verify_chichi(b, r)) {
            std::ostringstream os;
            os << "case " << i << ": chi != chi_" << r << " for Betti vector of length "
               << b.size();
            res.failures.push_back(os.str());
        }
    }
    return res;
}

bool chi_r_unit_lattice_ok(int max_r) {
    for (int r = 0; r <= max_r; ++r) {
        BettiVector zr = central_extension_betti(BettiVector{1}, r);
        if (chi_r(zr, r) != 1) return false;
    }
    return true;
}

SuiteResult newton_oracle_suite(Rng& rng, long cases) {
    SuiteResult res;
    res.total = cases;
    const long primes[] = {2, 3, 5};
    for (long i = 0; i < cases; ++i) {
        PadicContext ctx(primes[i % 3]);
        int n = static_cast<int>(rng.uniform(2, 5));
        std::vector<Rational> diag;
        RatMatrix g = random_conjugated_diagonal(rng, ctx, n, diag);
        AbsValueSpectrum expected;
        for (const Rational& d : diag) expected.add(Rational(valuation(ctx, d).finite()), 1);
        AbsValueSpectrum got = eigen_abs_values(ctx, g);
        if (!(got == expected)) {
            std::ostringstream os;
            os << "case " << i << " (q=" << ctx.q << ", n=" << n << "): expected "
               << expected.str() << ", got " << got.str();
            res.failures.push_back(os.str());
        }
    }
    return res;
}

RegionSuite region_suite(Rng& rng, long cases) {
    RegionSuite suite;
    suite.det_identity.total = cases;
    std::vector<LeviPair> ma_samples;

    for (long i = 0; i < cases; ++i) {
        PadicContext ctx(i % 2 == 0 ? 3 : 2);
        RootDatum rd = (i % 4 < 2) ? RootDatum::gl(2) : RootDatum::gl(3);
        LeviPair p = LeviPair::make(ctx, rd, random_A_minus_diag(rng, ctx, rd),
                                    random_elliptic_diag(rng, ctx, rd.n), true);
        DetIdentity d = det_identity(p);
        if (!d.equal()) {
            std::ostringstream os;
            os << "case " << i << ": |det(1-Ad(am))| = " << to_string(d.det_abs)
               << " but |a^{-2rho}| = " << to_string(d.modular_abs);
            suite.det_identity.failures.push_back(os.str());
        }
        ma_samples.push_back(std::move(p));
    }

    long violations = std::max(cases / 10, 50L);
    suite.contrapositive.total = violations;
    for (long i = 0; i < violations; ++i) {
        PadicContext ctx(i % 2 == 0 ? 3 : 2);
        RootDatum rd = (i % 4 < 2) ? RootDatum::gl(2) : RootDatum::gl(3);
        bool unit_m = i % 3 != 0;
        std::vector<Rational> m(rd.n);
        if (unit_m) {
            m = random_elliptic_diag(rng, ctx, rd.n);
        } else {
            for (auto& x : m) x = random_with_valuation(rng, ctx, rng.uniform(-2, 2));
        }
        LeviPair p = LeviPair::make(ctx, rd, random_not_A_minus_diag(rng, ctx, rd),
                                    std::move(m), unit_m);
        if (in_AM_tilde(p)) {
            std::ostringstream os;
            os << "violation case " << i << ": a outside A^- yet lambda(am) > 1";
            suite.contrapositive.failures.push_back(os.str());
        }
        ma_samples.push_back(std::move(p));
    }

    suite.ma = check_MA_properties(ma_samples);
    return suite;
}

}  // namespace lef
