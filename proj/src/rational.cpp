#include "g2v/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace g2v {

std::string rat_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rat_from_string(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw std::invalid_argument("bad rational '" + s + "'");
    mpz_class num(s.substr(num_begin, i - num_begin));
    mpz_class den(1);
    if (i < s.size()) {
        if (s[i] != '/') throw std::invalid_argument("bad rational '" + s + "'");
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size())
            throw std::invalid_argument("bad rational '" + s + "'");
        den = mpz_class(s.substr(den_begin, i - den_begin));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    if (neg) num = -num;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

bool is_positive_integer(const Rational& r) {
    return is_integer(r) && r > 0;
}

long to_long(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
        throw std::invalid_argument("rational is not a small integer");
    return c.get_num().get_si();
}

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational rising_factorial(const Rational& x, long m) {
    if (m < 0) throw std::invalid_argument("rising factorial of negative length");
    Rational acc = 1;
    Rational t = x;
    for (long j = 0; j < m; ++j) {
        acc *= t;
        t += 1;
    }
    return acc;
}

}  // namespace g2v
