#include "lef/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace lef {

Rational rational_power(long base, const Int& exponent) {
    if (base == 0) throw std::invalid_argument("rational_power: zero base");
    Int e = exponent >= 0 ? exponent : Int(-exponent);
    Int p = boost::multiprecision::pow(Int(base), e.convert_to<unsigned>());
    if (exponent >= 0) return Rational(p);
    return Rational(Int(1), p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string to_string(const Int& v) {
    return v.str();
}

std::string to_string(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace lef
