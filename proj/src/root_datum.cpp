#include "lef/root_datum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lef {

std::string family_name(Family f) {
    switch (f) {
        case Family::GLn: return "GL";
        case Family::SLn: return "SL";
        case Family::PGL2: return "PGL2";
    }
    return "?";
}

namespace {

IntVec e_minus_e(int n, int i, int j) {
    IntVec v(n, 0);
    v[i] = 1;
    v[j] = -1;
    return v;
}

void fill_gl_type_roots(RootDatum& rd) {
    const int n = rd.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            rd.roots.push_back(e_minus_e(n, i, j));
            rd.coroots.push_back(e_minus_e(n, i, j));
            int idx = static_cast<int>(rd.roots.size()) - 1;
            if (i < j) {
                rd.positive.push_back(idx);
                if (j == i + 1) rd.simple.push_back(idx);
            }
        }
    rd.rho2.resize(n);
    for (int i = 0; i < n; ++i) rd.rho2[i] = n - 1 - 2 * i;
}

}  // namespace

RootDatum RootDatum::gl(int n) {
    if (n < 2) throw std::invalid_argument("RootDatum::gl: n must be >= 2");
    RootDatum rd;
    rd.family = Family::GLn;
    rd.n = n;
    rd.rank = n;
    fill_gl_type_roots(rd);
    return rd;
}

RootDatum RootDatum::sl(int n) {
    if (n < 2) throw std::invalid_argument("RootDatum::sl: n must be >= 2");
    RootDatum rd;
    rd.family = Family::SLn;
    rd.n = n;
    rd.rank = n - 1;
    fill_gl_type_roots(rd);
    return rd;
}

RootDatum RootDatum::pgl2() {
    RootDatum rd;
    rd.family = Family::PGL2;
    rd.n = 2;
    rd.rank = 1;
    rd.roots = {{1, -1}, {-1, 1}};
    // Cocharacter classes mod the center, in the last-entry-0 gauge: the
    // class of diag(x, 1/x) is (2, 0), so (alpha, alpha-check) = 2.
    rd.coroots = {{2, 0}, {-2, 0}};
    rd.positive = {0};
    rd.simple = {0};
    rd.rho2 = {1, -1};
    return rd;
}

long pairing(const IntVec& chi, const IntVec& eta) {
    if (chi.size() != eta.size()) throw std::invalid_argument("pairing: rank mismatch");
    long acc = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) acc += chi[i] * eta[i];
    return acc;
}

const IntVec& coroot_of(const RootDatum& rd, const IntVec& alpha) {
    for (std::size_t i = 0; i < rd.roots.size(); ++i)
        if (rd.roots[i] == alpha) return rd.coroots[i];
    throw std::invalid_argument("coroot_of: not a root of this datum");
}

TorusElement TorusElement::from_valuations(const RootDatum& rd, const PadicContext& ctx,
                                           std::vector<long> vals) {
    if (static_cast<int>(vals.size()) != rd.n)
        throw std::invalid_argument("TorusElement: valuation vector has wrong length");
    switch (rd.family) {
        case Family::GLn: break;
        case Family::SLn: {
            long s = std::accumulate(vals.begin(), vals.end(), 0L);
            if (s != 0)
                throw std::invalid_argument("TorusElement: SL valuations must sum to zero");
            break;
        }
        case Family::PGL2: {
            long shift = vals.back();
            for (auto& v : vals) v -= shift;
            break;
        }
    }
    return TorusElement(rd.family, ctx, std::move(vals));
}

TorusElement TorusElement::from_diagonal(const RootDatum& rd, const PadicContext& ctx,
                                         const std::vector<Rational>& diag) {
    std::vector<long> vals;
    vals.reserve(diag.size());
    for (const Rational& d : diag) {
        Val v = valuation(ctx, d);
        if (v.is_infinite())
            throw std::invalid_argument("TorusElement: zero diagonal entry");
        vals.push_back(v.finite().convert_to<long>());
    }
    return from_valuations(rd, ctx, std::move(vals));
}

std::vector<long> TorusElement::sigma_coordinates() const {
    switch (family_) {
        case Family::GLn:
            return vals_;
        case Family::SLn:
            return std::vector<long>(vals_.begin(), vals_.end() - 1);
        case Family::PGL2:
            return {vals_[0]};
    }
    return {};
}

TorusElement TorusElement::power(long k) const {
    std::vector<long> vals = vals_;
    for (auto& v : vals) v *= k;
    return TorusElement(family_, ctx_, std::move(vals));
}

Quasicharacter Quasicharacter::from_values(std::vector<std::complex<double>> values) {
    for (const auto& z : values)
        if (z == std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("Quasicharacter: zero value");
    Quasicharacter chi;
    chi.values_ = std::move(values);
    return chi;
}

Quasicharacter Quasicharacter::unramified(const PadicContext& ctx,
                                          std::vector<Rational> re_exponents,
                                          std::vector<Rational> angle_turns) {
    if (!angle_turns.empty() && angle_turns.size() != re_exponents.size())
        throw std::invalid_argument("Quasicharacter: angle vector length mismatch");
    Quasicharacter chi;
    chi.values_.reserve(re_exponents.size());
    for (std::size_t i = 0; i < re_exponents.size(); ++i) {
        double mod = std::pow(static_cast<double>(ctx.q),
                              -re_exponents[i].convert_to<double>());
        double ang = angle_turns.empty()
                         ? 0.0
                         : 2.0 * std::numbers::pi * angle_turns[i].convert_to<double>();
        chi.values_.push_back(std::polar(mod, ang));
    }
    chi.abs_exponents_ = std::move(re_exponents);
    return chi;
}

Quasicharacter Quasicharacter::unitary(std::vector<Rational> angle_turns) {
    Quasicharacter chi;
    chi.values_.reserve(angle_turns.size());
    for (const Rational& t : angle_turns)
        chi.values_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * t.convert_to<double>()));
    chi.abs_exponents_ = std::vector<Rational>(angle_turns.size(), Rational(0));
    return chi;
}

const std::vector<Rational>& Quasicharacter::abs_exponents() const {
    if (!abs_exponents_) throw std::domain_error("Quasicharacter: no exact modulus data");
    return *abs_exponents_;
}

Quasicharacter Quasicharacter::operator*(const Quasicharacter& o) const {
    if (values_.size() != o.values_.size())
        throw std::invalid_argument("Quasicharacter: rank mismatch");
    Quasicharacter r;
    r.values_.resize(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = values_[i] * o.values_[i];
    if (abs_exponents_ && o.abs_exponents_) {
        std::vector<Rational> s(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i)
            s[i] = (*abs_exponents_)[i] + (*o.abs_exponents_)[i];
        r.abs_exponents_ = std::move(s);
    }
    return r;
}

bool is_positive(const RootDatum& rd, const std::vector<Rational>& nu) {
    if (static_cast<int>(nu.size()) != rd.n)
        throw std::invalid_argument("is_positive: rank mismatch");
    for (int idx : rd.positive) {
        Rational acc = 0;
        for (std::size_t i = 0; i < nu.size(); ++i) acc += nu[i] * rd.coroots[idx][i];
        if (!(acc > 0)) return false;
    }
    return true;
}

namespace {

std::complex<double> ipow(std::complex<double> z, long k) {
    if (k < 0) {
        z = 1.0 / z;
        k = -k;
    }
    std::complex<double> r(1.0, 0.0);
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

}  // namespace

std::complex<double> a_to_lambda(const TorusElement& a, const Quasicharacter& lambda) {
    std::vector<long> coords = a.sigma_coordinates();
    if (coords.size() != lambda.rank())
        throw std::invalid_argument("a_to_lambda: rank mismatch");
    std::complex<double> r(1.0, 0.0);
    for (std::size_t i = 0; i < coords.size(); ++i) r *= ipow(lambda.values()[i], coords[i]);
    return r;
}

std::vector<double> re_part(const Quasicharacter& chi, const PadicContext& ctx) {
    std::vector<double> re(chi.rank());
    if (chi.exact()) {
        for (std::size_t i = 0; i < re.size(); ++i)
            re[i] = chi.abs_exponents()[i].convert_to<double>();
    } else {
        const double logq = std::log(static_cast<double>(ctx.q));
        for (std::size_t i = 0; i < re.size(); ++i)
            re[i] = -std::log(std::abs(chi.values()[i])) / logq;
    }
    return re;
}

std::optional<std::vector<Rational>> re_part_exact(const Quasicharacter& chi) {
    if (!chi.exact()) return std::nullopt;
    return chi.abs_exponents();
}

bool in_A_minus(const TorusElement& a, const RootDatum& rd) {
    for (int idx : rd.simple) {
        const IntVec& alpha = rd.roots[idx];
        long v = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) v += alpha[i] * a.valuations()[i];
        if (v <= 0) return false;
    }
    return true;
}

Rational modular_delta(const TorusElement& a, const RootDatum& rd) {
    long e = 0;
    for (std::size_t i = 0; i < rd.rho2.size(); ++i) e += rd.rho2[i] * a.valuations()[i];
    return rational_power(a.context().q, Int(-e));
}

}  // namespace lef
