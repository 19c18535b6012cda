#include "lef/lefschetz.hpp"

#include <cmath>
#include <stdexcept>

namespace lef {

IntMatrix adjacency_matrix(const GeodesicGraph& g) {
    IntMatrix a(g.num_vertices, g.num_vertices);
    for (std::size_t e = 0; e < g.directed_edges(); ++e) a(g.tail[e], g.head[e]) += 1;
    return a;
}

SpectralSide spectral_side_from_adjacency(const GeodesicGraph& g, int m_max) {
    SpectralSide s;
    s.q = g.q;
    s.adjacency_charpoly = charpoly(adjacency_matrix(g));
    s.correction_exponent =
        static_cast<long>(g.undirected_edges()) - static_cast<long>(g.num_vertices);

    // Each adjacency eigenvalue lambda contributes the root pair of
    // u^2 - lambda u + q; the pair's power sums p_m(lambda) obey
    // p_0 = 2, p_1 = lambda, p_m = lambda p_{m-1} - q p_{m-2}. Summing
    // over the adjacency spectrum turns monomials lambda^k into the Newton
    // power sums N_k of the characteristic polynomial.
    std::vector<Int> n_k = newton_power_sums(s.adjacency_charpoly, m_max);
    IntPoly p_prev{Int(2)};
    IntPoly p_cur{Int(0), Int(1)};
    for (int m = 1; m <= m_max; ++m) {
        Int total = 0;
        for (std::size_t k = 0; k < p_cur.size(); ++k) total += p_cur[k] * n_k[k];
        long corr = (m % 2 == 0) ? 2 : 0;  // the extra pairs are {+1, -1}
        total += Int(s.correction_exponent) * corr;
        s.power_sums[m] = total;

        IntPoly p_next = poly_sub(poly_shift(p_cur, 1), poly_mul(IntPoly{Int(g.q)}, p_prev));
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
    }
    return s;
}

GeometricSide geometric_side(const GeodesicGraph& g, int max_len, const EdgeCharacter& omega,
                             std::complex<double> sigma_value) {
    if (max_len < 1) throw std::invalid_argument("geometric_side: length bound must be >= 1");
    GeometricSide side;
    side.exact_valid = omega.is_trivial() && sigma_value == std::complex<double>(1.0, 0.0);
    for (int m = 1; m <= max_len; ++m) {
        side.values[m] = 0.0;
        if (side.exact_valid) side.exact[m] = 0;
    }

    const BettiVector betti_z{1, 1};  // H^*(Z, Q)
    std::vector<GeodesicClass> prims = primitive_geodesics(g, max_len);
    for (const GeodesicClass& c : prims) {
        const int l0 = c.length();
        // lambda_gamma = primitive length, chi_1(Z) = 1, sign (+1):
        // the centralizer covolume formula reproduces the enumeration weight.
        Rational weight = covolume(Rational(l0), 1, 1, betti_z);
        std::complex<double> prim_value = character_value(omega, c);
        for (int m = l0; m <= max_len; m += l0) {
            int mu = m / l0;
            std::complex<double> v = std::pow(prim_value, mu);
            side.values[m] += weight.convert_to<double>() * v * sigma_value;
            if (side.exact_valid) side.exact[m] += numerator(weight);
        }
    }
    return side;
}

std::complex<double> evaluate_distribution(const SpectralSide& side, const TestFunction& phi) {
    std::complex<double> acc = 0.0;
    for (const auto& [m, coeff] : phi.support) {
        auto it = side.power_sums.find(m);
        if (it == side.power_sums.end())
            throw std::invalid_argument("evaluate_distribution: support outside computed range");
        acc += coeff * it->second.convert_to<double>();
    }
    return acc;
}

std::complex<double> evaluate_distribution(const GeometricSide& side, const TestFunction& phi) {
    std::complex<double> acc = 0.0;
    for (const auto& [m, coeff] : phi.support) {
        auto it = side.values.find(m);
        if (it == side.values.end())
            throw std::invalid_argument("evaluate_distribution: support outside computed range");
        acc += coeff * it->second;
    }
    return acc;
}

LefschetzReport verify_lefschetz(const GeodesicGraph& g, int max_len,
                                 const EdgeCharacter& omega) {
    if (max_len < 1) throw std::invalid_argument("verify_lefschetz: length bound must be >= 1");
    LefschetzReport rep;
    rep.graph = g.name;
    rep.q = g.q;
    rep.vertices = g.num_vertices;
    rep.directed_edges = g.directed_edges();
    rep.twisted = !omega.is_trivial();
    rep.dictionary.chi1_centralizer = chi_r(BettiVector{1, 1}, 1);
    rep.dictionary.sign = 1;  // (-1)^{q(G)+r}, q(G) = r = 1 in the rank-one model

    GeometricSide geo = geometric_side(g, max_len, omega);
    rep.all_pass = true;

    if (!rep.twisted) {
        std::vector<Int> traces = transfer_traces(g, max_len);
        SpectralSide spec = spectral_side_from_adjacency(g, max_len);
        for (int m = 1; m <= max_len; ++m) {
            LefschetzRow row;
            row.m = m;
            row.geometric_exact = geo.exact.at(m);
            row.transfer_exact = traces[m];
            row.spectral_exact = spec.power_sums.at(m);
            row.geometric = row.geometric_exact->convert_to<double>();
            row.transfer_trace = row.transfer_exact->convert_to<double>();
            row.spectral = row.spectral_exact->convert_to<double>();
            row.pass = (*row.geometric_exact == *row.transfer_exact) &&
                       (*row.transfer_exact == *row.spectral_exact);
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(std::move(row));
        }
    } else {
        constexpr double kTol = 1e-9;
        std::vector<std::complex<double>> traces = twisted_transfer_traces(g, omega, max_len);
        for (int m = 1; m <= max_len; ++m) {
            LefschetzRow row;
            row.m = m;
            row.geometric = geo.values.at(m);
            row.transfer_trace = traces[m];
            row.pass = std::abs(row.geometric - row.transfer_trace) < kTol;
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

std::vector<IntMatrix> hecke_operators(const GeodesicGraph& g, int m_max) {
    std::vector<IntMatrix> a;
    a.reserve(m_max + 1);
    a.push_back(IntMatrix::identity(g.num_vertices));
    if (m_max >= 1) a.push_back(adjacency_matrix(g));
    for (int m = 2; m <= m_max; ++m) {
        IntMatrix next = a[1] * a[m - 1];
        long drop = (m == 2) ? g.q + 1 : g.q;
        IntMatrix prev = a[m - 2].scaled(Int(drop));
        a.push_back(next - prev);
    }
    return a;
}

IntMatrix hecke_operator(const GeodesicGraph& g, int m) {
    if (m < 0) throw std::invalid_argument("hecke_operator: m must be nonnegative");
    return hecke_operators(g, m).back();
}

std::vector<IntPoly> hecke_polynomials(long q, int m_max) {
    std::vector<IntPoly> p;
    p.reserve(m_max + 1);
    p.push_back(IntPoly{Int(1)});
    if (m_max >= 1) p.push_back(IntPoly{Int(0), Int(1)});
    for (int m = 2; m <= m_max; ++m) {
        long drop = (m == 2) ? q + 1 : q;
        p.push_back(poly_sub(poly_shift(p[m - 1], 1), poly_mul(IntPoly{Int(drop)}, p[m - 2])));
    }
    return p;
}

std::vector<HeckeCheck> hecke_suite(const GeodesicGraph& g, int m_max) {
    std::vector<IntMatrix> a = hecke_operators(g, m_max + 1);
    std::vector<IntPoly> p = hecke_polynomials(g.q, m_max);
    IntPoly adjacency_cp = charpoly(a[1]);
    std::vector<HeckeCheck> checks;
    for (int m = 1; m <= m_max; ++m) {
        HeckeCheck c;
        c.m = m;
        long drop = (m == 1) ? g.q + 1 : g.q;
        IntMatrix lhs = a[1] * a[m];
        IntMatrix rhs = a[m + 1] + a[m - 1].scaled(Int(drop));
        c.recurrence_ok = lhs == rhs;
        c.spectral_map_ok =
            charpoly(a[m]) == charpoly_of_polynomial_image(adjacency_cp, p[m]);
        c.trace = a[m].trace();
        checks.push_back(std::move(c));
    }
    return checks;
}

}  // namespace lef
