#include "qhn/field.hpp"

#include <sstream>

namespace qhn {

Rational Field::normalize(const Rational& x) const {
    if (p == 0) return x;  // cpp_rational keeps itself reduced
    // Residues are integers; incoming values may be any integer.
    Int num = numerator(x);
    Int den = denominator(x);
    if (den != 1) throw MalformedInput("non-integral value in prime field F_" + std::to_string(p));
    Int r = num % p;
    if (r < 0) r += p;
    return Rational(r);
}

Rational Field::inv(const Rational& a) const {
    if (p == 0) {
        if (a == 0) throw MalformedInput("division by zero");
        return 1 / a;
    }
    Int r = numerator(normalize(a));
    if (r == 0) throw MalformedInput("division by zero in F_" + std::to_string(p));
    // extended Euclid on (r, p)
    std::int64_t a0 = static_cast<std::int64_t>(r), m = p;
    std::int64_t old_r = a0, cur_r = m, old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        std::int64_t q = old_r / cur_r;
        std::int64_t t = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = t;
        t = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = t;
    }
    std::int64_t s = old_s % m;
    if (s < 0) s += m;
    return Rational(s);
}

std::string Field::name() const {
    return p == 0 ? std::string("Q") : "F_" + std::to_string(p);
}

Field rational_field() { return Field{0}; }

Field prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw MalformedInput("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string to_string(const Rational& x) {
    std::ostringstream os;
    if (denominator(x) == 1) {
        os << numerator(x);
    } else {
        os << numerator(x) << "/" << denominator(x);
    }
    return os.str();
}

std::string to_decimal(const Rational& x, unsigned digits) {
    Int num = numerator(x);
    Int den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = num * scale * 2 + den;  // round half away from zero
    Int q = scaled / (den * 2);
    Int whole = q / scale;
    Int frac = q % scale;
    std::ostringstream os;
    if (neg && q != 0) os << '-';
    os << whole;
    if (digits > 0) {
        std::string f = frac.str();
        os << '.' << std::string(digits - f.size(), '0') << f;
    }
    return os.str();
}

}  // namespace qhn
