#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lef/euler.hpp"
#include "lef/geodesic_graph.hpp"
#include "lef/polynomial.hpp"

namespace lef {

// Spectral data of the transfer operator, held exactly: the adjacency
// characteristic polynomial over Z plus the exponent of the (1-u^2)
// correction factor from the determinant identity
//   det(I - uT) = (1 - u^2)^{|E|-|V|} det(I - uA + q u^2 I).
// Power sums tr(T^m) are derived by Newton recursions; no roots are ever
// extracted numerically.
struct SpectralSide {
    long q = 0;
    IntPoly adjacency_charpoly;
    long correction_exponent = 0;       // |E| - |V|
    std::map<int, Int> power_sums;      // m -> tr(T^m)
};

SpectralSide spectral_side_from_adjacency(const GeodesicGraph& g, int m_max);

// Geometric side: terms[m] = sum over geodesic classes of length m of
// lambda_gamma * chi_1(Z) * omega(gamma) * sigma, where lambda_gamma is the
// primitive length and chi_1 is supplied by the Euler-characteristic module.
// The test-function weight phi(a)|a^{2 rho}| is normalized away here and
// reinstated in evaluate_distribution.
struct GeometricSide {
    std::map<int, Int> exact;                    // engaged iff exact_valid
    std::map<int, std::complex<double>> values;  // always present
    bool exact_valid = false;
};

GeometricSide geometric_side(const GeodesicGraph& g, int max_len, const EdgeCharacter& omega,
                             std::complex<double> sigma_value = {1.0, 0.0});

// Finitely supported test function on A^-/A_c, identified with the positive
// integers in rank one.
struct TestFunction {
    std::map<int, std::complex<double>> support;
};

std::complex<double> evaluate_distribution(const SpectralSide& side, const TestFunction& phi);
std::complex<double> evaluate_distribution(const GeometricSide& side, const TestFunction& phi);

struct LefschetzRow {
    int m = 0;
    std::optional<Int> geometric_exact, transfer_exact, spectral_exact;
    std::complex<double> geometric, transfer_trace;
    std::optional<std::complex<double>> spectral;  // absent on twisted runs
    bool pass = false;
};

// Model dictionary used by the verifier, recorded in every report.
struct LefschetzDictionary {
    std::string lambda_gamma = "primitive length of the class";
    Int chi1_centralizer;  // chi_1 of Z, computed, not hardcoded
    int sign = 0;          // (-1)^{q(G)+r} with q(G) = r = 1
    std::string phi_normalization =
        "phi(a) = |a^{-2rho}| * indicator(length = m), cancelling |a^{2rho}|";
};

struct LefschetzReport {
    std::string graph;
    long q = 0;
    std::size_t vertices = 0;
    std::size_t directed_edges = 0;
    bool twisted = false;
    std::vector<LefschetzRow> rows;
    bool all_pass = false;
    LefschetzDictionary dictionary;
};

// Per length m <= max_len compares three independently computed numbers:
// geodesic enumeration, the trace of the (possibly twisted) transfer matrix,
// and (untwisted only) the adjacency-derived power sum. Untwisted values
// must agree exactly as integers; twisted ones within 1e-9.
LefschetzReport verify_lefschetz(const GeodesicGraph& g, int max_len, const EdgeCharacter& omega);

IntMatrix adjacency_matrix(const GeodesicGraph& g);

// Spherical Hecke operators on vertices: A_0 = I, A_1 = adjacency,
// A_1 A_1 = A_2 + (q+1) I and A_1 A_m = A_{m+1} + q A_{m-1} for m >= 2.
IntMatrix hecke_operator(const GeodesicGraph& g, int m);
std::vector<IntMatrix> hecke_operators(const GeodesicGraph& g, int m_max);

// The scalar polynomials P_m with A_m = P_m(A_1), same recurrence.
std::vector<IntPoly> hecke_polynomials(long q, int m_max);

struct HeckeCheck {
    int m = 0;
    bool recurrence_ok = false;    // A_1 A_m = A_{m+1} + q A_{m-1} (q+1 at m = 1)
    bool spectral_map_ok = false;  // charpoly(A_m) = P_m-image of charpoly(A_1)
    Int trace;
};

std::vector<HeckeCheck> hecke_suite(const GeodesicGraph& g, int m_max);

}  // namespace lef
