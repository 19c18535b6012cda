#include "lef/padic.hpp"

#include <sstream>

namespace lef {

Int int_valuation(long q, Int n) {
    if (n == 0) throw std::invalid_argument("int_valuation: zero argument");
    Int v = 0;
    while (n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

Val valuation(const PadicContext& ctx, const Rational& x) {
    if (x == 0) return Val::infinity();
    return Val(int_valuation(ctx.q, numerator(x)) - int_valuation(ctx.q, denominator(x)));
}

void AbsValueSpectrum::add(const Rational& valuation_exponent, long multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("AbsValueSpectrum: multiplicity must be positive");
    entries_[valuation_exponent] += multiplicity;
}

long AbsValueSpectrum::dimension() const {
    long d = 0;
    for (const auto& [s, m] : entries_) d += m;
    return d;
}

Rational AbsValueSpectrum::min_valuation() const {
    if (entries_.empty()) throw std::invalid_argument("AbsValueSpectrum: empty spectrum");
    return entries_.begin()->first;
}

Rational AbsValueSpectrum::max_valuation() const {
    if (entries_.empty()) throw std::invalid_argument("AbsValueSpectrum: empty spectrum");
    return entries_.rbegin()->first;
}

std::string AbsValueSpectrum::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [s, m] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << s << ": " << m;
    }
    os << "}";
    return os.str();
}

NewtonResult newton_slopes(const PadicContext& ctx, const RatPoly& poly) {
    RatPoly p = poly;
    poly_trim(p);
    if (p.empty()) throw std::invalid_argument("newton_slopes: zero polynomial");

    std::size_t k = 0;
    while (p[k] == 0) ++k;  // order of vanishing at 0

    struct Pt {
        long x;
        Int y;
    };
    std::vector<Pt> pts;
    for (std::size_t i = k; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        pts.push_back({static_cast<long>(i - k), valuation(ctx, p[i]).finite()});
    }

    // lower convex hull, x strictly increasing; collinear points merge
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            Int cross = Int(b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * Int(pt.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    NewtonResult res;
    res.zero_roots = static_cast<long>(k);
    for (std::size_t t = 0; t + 1 < hull.size(); ++t) {
        long len = hull[t + 1].x - hull[t].x;
        Rational slope(hull[t + 1].y - hull[t].y, Int(len));
        res.slopes.add(-slope, len);
    }
    return res;
}

AbsValueSpectrum eigen_abs_values(const PadicContext& ctx, const RatMatrix& g) {
    if (!g.square()) throw std::invalid_argument("eigen_abs_values: non-square matrix");
    RatPoly cp = charpoly_rational(g);
    if (cp[0] == 0) throw std::domain_error("eigen_abs_values: singular matrix");
    return newton_slopes(ctx, cp).slopes;
}

LambdaExtremes lambda_min_max(const AbsValueSpectrum& spec) {
    if (spec.empty()) throw std::invalid_argument("lambda_min_max: empty spectrum");
    return {-spec.max_valuation(), -spec.min_valuation()};
}

bool has_root_of_unity_eigenvalue(const RatMatrix& g, long degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("has_root_of_unity_eigenvalue: bound must be >= 1");
    RatPoly f = charpoly_rational(g);
    for (long k = 2; k <= degree_bound; ++k) {
        RatPoly phi = to_rational_poly(cyclotomic(static_cast<unsigned>(k)));
        if (poly_degree(monic_gcd(f, phi)) >= 1) return true;
    }
    return false;
}

bool has_root_of_unity_eigenvalue(const RatMatrix& g) {
    long n = static_cast<long>(g.rows());
    return has_root_of_unity_eigenvalue(g, n * n);
}

}  // namespace lef
