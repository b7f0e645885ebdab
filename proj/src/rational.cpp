#include "curvesim/rational.hpp"

#include <cctype>
#include <sstream>

namespace curvesim {

Rational parse_rational(std::string_view s) {
    // strip surrounding whitespace
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);
    if (s.empty()) throw ParseError("empty rational literal");

    auto check_digits = [](std::string_view part) {
        if (part.empty()) return false;
        size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };

    size_t slash = s.find('/');
    std::string num_s, den_s = "1";
    if (slash == std::string_view::npos) {
        num_s = std::string(s);
    } else {
        num_s = std::string(s.substr(0, slash));
        den_s = std::string(s.substr(slash + 1));
    }
    if (!check_digits(num_s) || !check_digits(den_s))
        throw ParseError("invalid rational literal '" + std::string(s) + "' (expected p or p/q)");
    Integer num(num_s), den(den_s);
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string decimal_string(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|q| * 10^digits) to nearest, half away from zero
    bool neg = sgn(q) < 0;
    Integer num = ::abs(Integer(q.get_num())) * scale;
    Integer den = q.get_den();
    Integer ar;
    mpz_fdiv_q(ar.get_mpz_t(), Integer(2 * num + den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    if (sgn(ar) == 0) neg = false;
    std::string s = ar.get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

unsigned bitsize(const Integer& n) {
    // tau(k) = ceil(log2 |k|) + 1, with tau(0) = 1
    if (sgn(n) == 0) return 1;
    Integer a = ::abs(n);
    auto sz = static_cast<unsigned>(mpz_sizeinbase(a.get_mpz_t(), 2));  // floor(log2)+1
    bool pow2 = mpz_popcount(a.get_mpz_t()) == 1;
    return pow2 ? sz : sz + 1;
}

unsigned bitsize(const Rational& q) {
    unsigned a = bitsize(Integer(q.get_num()));
    unsigned b = bitsize(Integer(q.get_den()));
    return a > b ? a : b;
}

Rational pow(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

std::string to_string(const GaussianRational& z) {
    if (is_zero(z.im)) return to_string(z.re);
    std::string out;
    if (!is_zero(z.re)) out += to_string(z.re);
    if (sgn(z.im) >= 0 && !out.empty()) out += "+";
    if (z.im == Rational(1))
        out += "i";
    else if (z.im == Rational(-1))
        out += "-i";
    else
        out += to_string(z.im) + "*i";
    return out;
}

}  // namespace curvesim
