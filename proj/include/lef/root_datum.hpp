#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lef/padic.hpp"
#include "lef/rational.hpp"

namespace lef {

using IntVec = std::vector<long>;

enum class Family { GLn, SLn, PGL2 };

std::string family_name(Family f);

// Root datum of the diagonal split torus with the upper-triangular Borel.
// Characters and cocharacters are realized as integer vectors in the ambient
// Z^n with the dot-product pairing; SL_n lives on the sum-zero sublattice,
// PGL2 in the gauge where the last coordinate of a cocharacter class is 0.
// 2*rho is stored instead of rho so that all lattice data stays integral.
struct RootDatum {
    Family family;
    int n;     // matrix size
    int rank;  // dim A
    std::vector<IntVec> roots;
    std::vector<IntVec> coroots;  // aligned with roots
    std::vector<int> positive;    // indices into roots
    std::vector<int> simple;      // indices into roots
    IntVec rho2;

    static RootDatum gl(int n);
    static RootDatum sl(int n);
    static RootDatum pgl2();
};

// Z-valued pairing of a character with a cocharacter (dot product in the
// chosen coordinates).
long pairing(const IntVec& chi, const IntVec& eta);

// Torus element recorded by the valuations of its diagonal entries, i.e. its
// image in Sigma = A/A_c. SL_n requires the valuations to sum to zero; PGL2
// classes are stored with last entry 0.
class TorusElement {
public:
    static TorusElement from_valuations(const RootDatum& rd, const PadicContext& ctx,
                                        std::vector<long> vals);
    static TorusElement from_diagonal(const RootDatum& rd, const PadicContext& ctx,
                                      const std::vector<Rational>& diag);

    const std::vector<long>& valuations() const { return vals_; }
    const PadicContext& context() const { return ctx_; }
    Family family() const { return family_; }

    // coordinates in a fixed basis of Sigma (length = dim A)
    std::vector<long> sigma_coordinates() const;

    TorusElement power(long k) const;

private:
    TorusElement(Family f, PadicContext ctx, std::vector<long> vals)
        : family_(f), ctx_(ctx), vals_(std::move(vals)) {}
    Family family_;
    PadicContext ctx_;
    std::vector<long> vals_;
};

// Unramified quasicharacter of A, stored by its values on the fixed basis of
// Sigma. When built from exact data the valuation exponents s_i with
// |z_i| = q^{-s_i} are kept alongside, so Re can be read off exactly.
class Quasicharacter {
public:
    static Quasicharacter from_values(std::vector<std::complex<double>> values);
    // z_i = q^{-re_exponents[i]} * exp(2*pi*i*angle_turns[i])
    static Quasicharacter unramified(const PadicContext& ctx, std::vector<Rational> re_exponents,
                                     std::vector<Rational> angle_turns = {});
    static Quasicharacter unitary(std::vector<Rational> angle_turns);

    std::size_t rank() const { return values_.size(); }
    const std::vector<std::complex<double>>& values() const { return values_; }
    bool exact() const { return abs_exponents_.has_value(); }
    const std::vector<Rational>& abs_exponents() const;

    Quasicharacter operator*(const Quasicharacter& o) const;

private:
    Quasicharacter() = default;
    std::vector<std::complex<double>> values_;
    std::optional<std::vector<Rational>> abs_exponents_;
};

// nu_alpha = (nu, coroot of alpha); alpha must be a root of rd.
template <class S>
S nu_alpha(const RootDatum& rd, const std::vector<S>& nu, const IntVec& alpha);

const IntVec& coroot_of(const RootDatum& rd, const IntVec& alpha);

// nu > 0 iff (nu, coroot) > 0 for every positive root.
bool is_positive(const RootDatum& rd, const std::vector<Rational>& nu);

// a^lambda = q^{-lambda(a)}, evaluated multiplicatively on the class of a.
std::complex<double> a_to_lambda(const TorusElement& a, const Quasicharacter& lambda);

// Re(chi): entry-wise -log_q |z_i|. Exact entries when chi carries them.
std::vector<double> re_part(const Quasicharacter& chi, const PadicContext& ctx);
std::optional<std::vector<Rational>> re_part_exact(const Quasicharacter& chi);

// a in A^- iff v(a^alpha) > 0 for every simple root alpha.
bool in_A_minus(const TorusElement& a, const RootDatum& rd);

// Delta_P(a) = |a^{2 rho}| = q^{-(2 rho, v(a))}, exact.
Rational modular_delta(const TorusElement& a, const RootDatum& rd);

// --- template implementation ---

template <class S>
S nu_alpha(const RootDatum& rd, const std::vector<S>& nu, const IntVec& alpha) {
    const IntVec& cr = coroot_of(rd, alpha);
    if (nu.size() != cr.size()) throw std::invalid_argument("nu_alpha: rank mismatch");
    S acc{};
    for (std::size_t i = 0; i < cr.size(); ++i) acc += nu[i] * S(cr[i]);
    return acc;
}

}  // namespace lef
