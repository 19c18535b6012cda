#pragma once

#include <initializer_list>
#include <vector>

#include "lef/rational.hpp"

namespace lef {

// Betti numbers b_p = dim H^p(., Q), trailing zeros trimmed. When the last
// entry is nonzero, length - 1 is the cohomological dimension.
class BettiVector {
public:
    BettiVector() = default;
    BettiVector(std::initializer_list<Int> b) : b_(b) { normalize(); }
    explicit BettiVector(std::vector<Int> b) : b_(std::move(b)) { normalize(); }

    Int at(std::size_t p) const { return p < b_.size() ? b_[p] : Int(0); }
    std::size_t size() const { return b_.size(); }
    const std::vector<Int>& entries() const { return b_; }

    bool operator==(const BettiVector&) const = default;

private:
    void normalize();
    std::vector<Int> b_;
};

Int binomial(long p, long r);

// chi = sum (-1)^p b_p
Int chi(const BettiVector& b);

// chi_r = sum_p (-1)^{p+r} C(p, r) b_p; chi_0 = chi.
Int chi_r(const BettiVector& b, int r);

// Betti vector of a group Gamma in a central extension
// 1 -> Z^r -> Gamma -> Lambda -> 1 whose spectral sequence degenerates:
// the r-fold convolution of b(Lambda) with (1, 1).
BettiVector central_extension_betti(const BettiVector& b_lambda, int r);

// chi(Lambda) == chi_r(Gamma) for the extension above, together with the
// one-step ladder chi_{s-1} == chi_s after each single convolution.
bool verify_chichi(const BettiVector& b_lambda, int r);

// vol(Gamma_gamma \ G_gamma) = lambda_gamma * (-1)^{qG + r} * chi_r(b)
Rational covolume(const Rational& lambda_gamma, int qG, int r, const BettiVector& b);

}  // namespace lef
