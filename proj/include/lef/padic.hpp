#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "lef/matrix.hpp"
#include "lef/polynomial.hpp"
#include "lef/rational.hpp"

namespace lef {

// The local field is modeled as Q carrying the q-adic valuation; the
// uniformizer is q itself. Everything downstream depends only on
// valuations, so this loses nothing while keeping all arithmetic exact.
struct PadicContext {
    explicit PadicContext(long q_) : q(q_) {
        if (!is_prime(q)) throw std::invalid_argument("PadicContext: q must be prime");
    }
    long q;
};

// Extended integer: a finite value or +infinity (the valuation of 0).
class Val {
public:
    Val(Int v) : finite_(true), v_(std::move(v)) {}  // NOLINT: implicit by design
    Val(long v) : Val(Int(v)) {}                     // NOLINT
    static Val infinity() { return Val(); }

    bool is_infinite() const { return !finite_; }
    const Int& finite() const {
        if (!finite_) throw std::domain_error("Val: infinite valuation has no finite value");
        return v_;
    }

    Val operator+(const Val& o) const {
        if (!finite_ || !o.finite_) return infinity();
        return Val(v_ + o.v_);
    }
    bool operator==(const Val& o) const {
        return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
    }

    std::string str() const { return finite_ ? v_.str() : "+inf"; }

private:
    Val() : finite_(false) {}
    bool finite_;
    Int v_ = 0;
};

// v_q of a nonzero integer
Int int_valuation(long q, Int n);

// q-adic valuation of a rational; +infinity for 0. Additive on products.
Val valuation(const PadicContext& ctx, const Rational& x);

// Multiset of eigenvalue absolute values of an operator, recorded as the
// valuation exponents s (the absolute value itself is q^{-s}).
class AbsValueSpectrum {
public:
    void add(const Rational& valuation_exponent, long multiplicity);
    const std::map<Rational, long>& entries() const { return entries_; }
    long dimension() const;
    bool empty() const { return entries_.empty(); }

    Rational min_valuation() const;
    Rational max_valuation() const;

    bool operator==(const AbsValueSpectrum&) const = default;
    std::string str() const;

private:
    std::map<Rational, long> entries_;
};

struct NewtonResult {
    AbsValueSpectrum slopes;  // valuations of the nonzero roots
    long zero_roots = 0;      // order of vanishing at 0 (valuation +infinity)
};

// Root valuations of a rational-coefficient polynomial read off the lower
// convex hull of the points (i, v(a_i)): a hull segment of slope -s and
// horizontal length l contributes l roots of valuation s.
NewtonResult newton_slopes(const PadicContext& ctx, const RatPoly& poly);

// E(g|V) for the standard space: valuations of the eigenvalues of g over
// the algebraic closure, via the Newton polygon of the characteristic
// polynomial. Rejects singular g.
AbsValueSpectrum eigen_abs_values(const PadicContext& ctx, const RatMatrix& g);

// lambda_min/lambda_max of a spectrum, encoded as exponents of q:
// lambda = q^exponent, so min_exponent = -max valuation.
struct LambdaExtremes {
    Rational min_exponent;
    Rational max_exponent;
};
LambdaExtremes lambda_min_max(const AbsValueSpectrum& spec);

// True iff the characteristic polynomial shares a factor with some
// cyclotomic polynomial Phi_k, 2 <= k <= degree_bound. Eigenvalue 1 never
// triggers. The default bound is n^2 for an n x n input.
bool has_root_of_unity_eigenvalue(const RatMatrix& g, long degree_bound);
bool has_root_of_unity_eigenvalue(const RatMatrix& g);

}  // namespace lef
