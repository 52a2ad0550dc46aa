#include "fatcantor/rational.hpp"

#include <cctype>

namespace fc {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(s))
            throw std::invalid_argument("not a rational: '" + s + "'");
        return Rational(mpq_class(mpz_class(s, 10)));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: '" + s + "'");
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    mpq_class q(mpz_class(num, 10), d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && v_ == 0) throw std::domain_error("Rational: 0 to negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), n);
    mpq_class r = invert ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("decimal: negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|v| * 10^digits) with ties away from zero
    mpz_class num = ::abs(v_.get_num()) * scale;
    mpz_class den = v_.get_den();
    mpz_class q = (2 * num + den) / (2 * den);
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, std::string(digits + 1 - s.size(), '0'));
    std::string out;
    if (sgn(v_) < 0 && q != 0) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

Rational pow2(long e) {
    return Rational(2).pow(e);
}

}  // namespace fc
