#include "lef/euler.hpp"

#include <stdexcept>

namespace lef {

void BettiVector::normalize() {
    for (const Int& x : b_)
        if (x < 0) throw std::invalid_argument("BettiVector: negative entry");
    while (!b_.empty() && b_.back() == 0) b_.pop_back();
}

Int binomial(long p, long r) {
    if (r < 0 || p < 0 || r > p) return 0;
    if (r > p - r) r = p - r;
    Int num = 1;
    for (long i = 0; i < r; ++i) {
        num *= p - i;
        num /= i + 1;  // always exact: product of i+1 consecutive integers
    }
    return num;
}

Int chi(const BettiVector& b) {
    Int acc = 0;
    for (std::size_t p = 0; p < b.size(); ++p)
        acc += (p % 2 == 0) ? b.at(p) : -b.at(p);
    return acc;
}

Int chi_r(const BettiVector& b, int r) {
    if (r < 0) throw std::invalid_argument("chi_r: r must be nonnegative");
    Int acc = 0;
    for (std::size_t p = 0; p < b.size(); ++p) {
        Int term = binomial(static_cast<long>(p), r) * b.at(p);
        acc += ((static_cast<long>(p) + r) % 2 == 0) ? term : -term;
    }
    return acc;
}

BettiVector central_extension_betti(const BettiVector& b_lambda, int r) {
    if (r < 0) throw std::invalid_argument("central_extension_betti: r must be nonnegative");
    std::vector<Int> cur(b_lambda.entries());
    for (int step = 0; step < r; ++step) {
        // convolution with (1, 1): the circle-like cohomology of Z
        std::vector<Int> next(cur.size() + 1, Int(0));
        for (std::size_t p = 0; p < cur.size(); ++p) {
            next[p] += cur[p];
            next[p + 1] += cur[p];
        }
        cur = std::move(next);
    }
    return BettiVector(std::move(cur));
}

bool verify_chichi(const BettiVector& b_lambda, int r) {
    if (chi(b_lambda) != chi_r(central_extension_betti(b_lambda, r), r)) return false;
    // ladder: one convolution raises the index by one
    for (int s = 1; s <= r; ++s) {
        BettiVector base = central_extension_betti(b_lambda, s - 1);
        BettiVector up = central_extension_betti(base, 1);
        if (chi_r(base, s - 1) != chi_r(up, s)) return false;
    }
    return true;
}

Rational covolume(const Rational& lambda_gamma, int qG, int r, const BettiVector& b) {
    Int sign = ((qG + r) % 2 == 0) ? 1 : -1;
    return lambda_gamma * Rational(sign * chi_r(b, r));
}

}  // namespace lef
