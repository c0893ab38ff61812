#include "iitk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace iitk {

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) bad(text);
        mpz_class num(std::string(ns), 10), den(std::string(ds), 10);
        if (den == 0) bad(text);
        r = Rational(num, den);
    } else {
        // decimal literal: digits [. digits] [e [sign] digits]
        std::string_view mant = s;
        long exp10 = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mant = s.substr(0, e);
            std::string_view es = s.substr(e + 1);
            bool eneg = false;
            if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
                eneg = es.front() == '-';
                es.remove_prefix(1);
            }
            if (!all_digits(es) || es.size() > 9) bad(text);
            exp10 = std::stol(std::string(es));
            if (eneg) exp10 = -exp10;
        }
        std::string digits;
        long frac_len = 0;
        if (auto dot = mant.find('.'); dot != std::string_view::npos) {
            std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
            if (ip.empty() && fp.empty()) bad(text);
            if (!ip.empty() && !all_digits(ip)) bad(text);
            if (!fp.empty() && !all_digits(fp)) bad(text);
            digits = std::string(ip) + std::string(fp);
            frac_len = static_cast<long>(fp.size());
        } else {
            if (!all_digits(mant)) bad(text);
            digits = std::string(mant);
        }
        if (digits.empty()) bad(text);
        mpz_class num(digits, 10);
        long e = exp10 - frac_len;
        if (e >= 0)
            r = Rational(num * pow10(static_cast<unsigned long>(e)));
        else
            r = Rational(num, pow10(static_cast<unsigned long>(-e)));
    }
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace iitk
