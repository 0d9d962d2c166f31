#include "griesskit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace griesskit {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("pow: 0 to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational acc(1);
    Rational b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace griesskit
