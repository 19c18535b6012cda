#include "lef/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lef {

IntPoly cyclotomic(unsigned k) {
    if (k == 0) throw std::invalid_argument("cyclotomic: k must be positive");
    // x^k - 1
    IntPoly num(k + 1, Int(0));
    num[0] = -1;
    num[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic(d));
    }
    return num;
}

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    const long dd = poly_degree(den);
    if (dd < 0) throw std::invalid_argument("poly_divide_exact: zero divisor");
    const Int& lc = den[dd];
    if (lc != 1 && lc != -1)
        throw std::invalid_argument("poly_divide_exact: divisor not unit-monic");
    poly_trim(num);
    long dn = poly_degree(num);
    IntPoly q(dn - dd + 1 > 0 ? dn - dd + 1 : 0, Int(0));
    while (dn >= dd) {
        Int f = num[dn] / lc;
        q[dn - dd] = f;
        for (long i = 0; i <= dd; ++i) num[dn - dd + i] -= f * den[i];
        poly_trim(num);
        dn = poly_degree(num);
    }
    if (!num.empty()) throw std::invalid_argument("poly_divide_exact: non-zero remainder");
    return q;
}

std::vector<Int> newton_power_sums(const IntPoly& monic, int m_max) {
    const long n = poly_degree(monic);
    if (n < 0 || monic[n] != 1)
        throw std::invalid_argument("newton_power_sums: polynomial must be monic");
    // elementary symmetric functions: e_j = (-1)^j c_{n-j}
    std::vector<Int> e(n + 1);
    for (long j = 0; j <= n; ++j) e[j] = (j % 2 == 0) ? monic[n - j] : -monic[n - j];
    std::vector<Int> p(m_max + 1);
    p[0] = n;
    for (int k = 1; k <= m_max; ++k) {
        Int acc = 0;
        for (int j = 1; j < k; ++j) {
            if (j > n) break;
            Int term = e[j] * p[k - j];
            acc += (j % 2 == 1) ? term : -term;
        }
        if (k <= n) acc += (k % 2 == 1) ? Int(k) * e[k] : -Int(k) * e[k];
        p[k] = acc;
    }
    return p;
}

IntMatrix companion_matrix(const IntPoly& monic) {
    const long n = poly_degree(monic);
    if (n < 1 || monic[n] != 1)
        throw std::invalid_argument("companion_matrix: polynomial must be monic of degree >= 1");
    IntMatrix c(n, n);
    for (long i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (long i = 0; i < n; ++i) c(i, n - 1) = -monic[i];
    return c;
}

IntMatrix eval_poly_at_matrix(const IntPoly& p, const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("eval_poly_at_matrix: non-square matrix");
    const std::size_t n = a.rows();
    IntMatrix r(n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * a;
        for (std::size_t d = 0; d < n; ++d) r(d, d) += p[i];
    }
    return r;
}

IntPoly charpoly_of_polynomial_image(const IntPoly& f_monic, const IntPoly& p) {
    return charpoly(eval_poly_at_matrix(p, companion_matrix(f_monic)));
}

RatPoly to_rational_poly(const IntPoly& p) {
    RatPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]);
    return r;
}

namespace {

RatPoly poly_mod(RatPoly a, const RatPoly& b) {
    const long db = poly_degree(b);
    long da = poly_degree(a);
    while (da >= db && da >= 0) {
        Rational f = a[da] / b[db];
        for (long i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        poly_trim(a);
        da = poly_degree(a);
    }
    return a;
}

}  // namespace

RatPoly monic_gcd(RatPoly a, RatPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        RatPoly r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    long d = poly_degree(a);
    if (d >= 0 && a[d] != 1) {
        Rational lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

RatPoly charpoly_rational(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("charpoly_rational: non-square matrix");
    const long n = static_cast<long>(a.rows());
    Int den;
    IntMatrix m = clear_denominators(a, den);
    IntPoly ci = charpoly(m);
    // char_{a}(x) = den^{-n} char_{den*a}(den*x)
    RatPoly c(n + 1);
    Int dpow = 1;
    for (long k = n; k >= 0; --k) {
        c[k] = Rational(ci[k], dpow);
        dpow *= den;
    }
    return c;
}

std::string to_string(const IntPoly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i];
    }
    os << "]";
    return os.str();
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

IntMatrix clear_denominators(const RatMatrix& a, Int& den) {
    den = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) den = lcm(den, denominator(a(i, j)));
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rational scaled = a(i, j) * Rational(den);
            m(i, j) = numerator(scaled);
        }
    return m;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(pivot, j), w(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        Rational d = w(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0) continue;
            Rational f = w(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace lef
