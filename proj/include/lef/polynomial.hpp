#pragma once

#include <string>
#include <vector>

#include "lef/matrix.hpp"
#include "lef/rational.hpp"

namespace lef {

// Dense polynomials, coefficient of x^i stored at index i.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rational>;

template <class T>
void poly_trim(std::vector<T>& p) {
    while (!p.empty() && p.back() == T(0)) p.pop_back();
}

template <class T>
long poly_degree(const std::vector<T>& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != T(0)) return static_cast<long>(i);
    return -1;
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

template <class T>
std::vector<T> poly_sub(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> r(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == T(0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// multiplication by x^k
template <class T>
std::vector<T> poly_shift(const std::vector<T>& a, std::size_t k) {
    if (a.empty()) return {};
    std::vector<T> r(a.size() + k, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

template <class T, class S>
T poly_eval(const std::vector<T>& p, const S& x) {
    T acc{};
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// k-th cyclotomic polynomial, computed by exact division of x^k - 1 by the
// cyclotomic polynomials of the proper divisors of k.
IntPoly cyclotomic(unsigned k);

// Exact division; throws if the division leaves a remainder. The divisor
// must have an invertible (here: +-1) leading coefficient.
IntPoly poly_divide_exact(IntPoly num, const IntPoly& den);

// Power sums N_k = sum of lambda_i^k over the roots of a monic integer
// polynomial, k = 0..m_max, via the Newton identities. No root extraction.
std::vector<Int> newton_power_sums(const IntPoly& monic, int m_max);

IntMatrix companion_matrix(const IntPoly& monic);

// p(a) by Horner's rule with exact matrix arithmetic
IntMatrix eval_poly_at_matrix(const IntPoly& p, const IntMatrix& a);

// The monic polynomial whose roots are p(lambda_i) for lambda_i the roots of
// the monic f, i.e. the resultant Res_x(f(x), y - p(x)) normalized in y.
// Computed as the characteristic polynomial of p applied to the companion
// matrix of f.
IntPoly charpoly_of_polynomial_image(const IntPoly& f_monic, const IntPoly& p);

RatPoly to_rational_poly(const IntPoly& p);

// Euclidean gcd over Q, result normalized monic; gcd(0,0) = 0.
RatPoly monic_gcd(RatPoly a, RatPoly b);

// Characteristic polynomial of a rational matrix: denominators are cleared,
// the integer Berkowitz routine runs on the scaled matrix, and the
// coefficients are rescaled back.
RatPoly charpoly_rational(const RatMatrix& a);

std::string to_string(const IntPoly& p);

}  // namespace lef
