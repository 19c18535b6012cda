#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lef/contraction.hpp"
#include "lef/euler.hpp"
#include "lef/geodesic_graph.hpp"
#include "lef/root_datum.hpp"

namespace lef {

// Deterministic, seed-driven randomness. Draws avoid std::*_distribution so
// the same seed yields the same stream on every implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double unit_real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool coin() { return (eng_() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

// nonzero rational of valuation 0
Rational random_unit(Rng& rng, const PadicContext& ctx);
// q^v * unit
Rational random_with_valuation(Rng& rng, const PadicContext& ctx, long v);

// diagonal entries with strictly decreasing valuations (a in A^-);
// respects the SL sum-zero and PGL2 gauge conventions
std::vector<Rational> random_A_minus_diag(Rng& rng, const PadicContext& ctx, const RootDatum& rd);
// diagonal entries violating the A^- chamber condition
std::vector<Rational> random_not_A_minus_diag(Rng& rng, const PadicContext& ctx,
                                              const RootDatum& rd);
std::vector<Rational> random_elliptic_diag(Rng& rng, const PadicContext& ctx, int n);

// P D P^{-1} for random unimodular integer P; the diagonal is returned so
// callers know the expected valuation multiset.
RatMatrix random_conjugated_diagonal(Rng& rng, const PadicContext& ctx, int n,
                                     std::vector<Rational>& diag_out);

BettiVector random_betti(Rng& rng, int max_len, long max_entry);

EdgeCharacter random_edge_character(Rng& rng, const GeodesicGraph& g);

struct SuiteResult {
    long total = 0;
    std::vector<std::string> failures;
    long failed() const { return static_cast<long>(failures.size()); }
    bool pass() const { return failures.empty(); }
};

// chi(Lambda) == chi_r(Gamma) on random Betti vectors, r cycling 1..4.
SuiteResult chichi_suite(Rng& rng, long cases);
// chi_r of the binomial-row Betti vector of Z^r equals 1 for r = 0..max_r.
bool chi_r_unit_lattice_ok(int max_r);

// eigen_abs_values(P D P^{-1}) against the known diagonal valuations,
// primes cycling {2, 3, 5}, sizes 2..5.
SuiteResult newton_oracle_suite(Rng& rng, long cases);

struct RegionSuite {
    SuiteResult det_identity;     // exact equality of the two determinant routes
    SuiteResult contrapositive;   // a outside A^- forces lambda(am) <= 1
    MAReport ma;
    bool pass() const { return det_identity.pass() && contrapositive.pass() && ma.pass(); }
};

// cases determinant-identity samples over GL2/GL3 plus at least
// max(cases/10, 50) chamber violations for the contrapositive.
RegionSuite region_suite(Rng& rng, long cases);

}  // namespace lef
