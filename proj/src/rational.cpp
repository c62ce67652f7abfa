#include "pact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pact {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("bad rational '" + text + "'");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        q.canonicalize();
        return Rat(q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("bad integer '" + text + "'");
        return Rat(q);
    }
    // decimal: sign, integer part, fractional part
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || dot == 0) throw std::invalid_argument("bad decimal '" + text + "'");
    for (std::size_t i = 0; i < digits.size(); ++i) {
        char c = digits[i];
        if (i == 0 && (c == '+' || c == '-')) continue;
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal '" + text + "'");
    }
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rat::hash() const {
    // cheap but stable: fold limbs of num and den
    auto fold = [](const mpz_class& z) {
        std::size_t h = 1469598103934665603ull;
        const mpz_srcptr p = z.get_mpz_t();
        int n = p->_mp_size;
        h = (h ^ static_cast<std::size_t>(n)) * 1099511628211ull;
        int an = n < 0 ? -n : n;
        for (int i = 0; i < an; ++i)
            h = (h ^ static_cast<std::size_t>(p->_mp_d[i])) * 1099511628211ull;
        return h;
    };
    return fold(v_.get_num()) * 31 + fold(v_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace pact
