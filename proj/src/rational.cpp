#include "gridmono/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gridmono {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        // decimal literal: sign, integer part, fractional part
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0) throw std::invalid_argument("bad rational literal: " + text);
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_rational_8th_power(const Rational& q) {
    if (q < 0) return false;
    mpz_class root;
    int exact_num = mpz_root(root.get_mpz_t(), q.get_num().get_mpz_t(), 8);
    if (!exact_num) return false;
    int exact_den = mpz_root(root.get_mpz_t(), q.get_den().get_mpz_t(), 8);
    return exact_den != 0;
}

}  // namespace gridmono
