#include "iitk/form.hpp"

#include <stdexcept>

namespace iitk {

namespace {
void check_same_n(const LinearForm& a, const LinearForm& b) {
    if (a.n != b.n) throw std::invalid_argument("linear form dimension mismatch");
}
}  // namespace

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    check_same_n(*this, o);
    for (size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    check_same_n(*this, o);
    for (size_t i = 0; i < coeff.size(); ++i) coeff[i] -= o.coeff[i];
    return *this;
}

LinearForm& LinearForm::operator*=(const Rational& k) {
    for (auto& c : coeff) c *= k;
    return *this;
}

bool LinearForm::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
LinearForm operator*(const Rational& k, LinearForm f) { return f *= k; }

Rational dot(const LinearForm& f, std::span<const Rational> values) {
    if (values.size() != f.coeff.size())
        throw std::invalid_argument("value vector dimension mismatch");
    Rational s = 0;
    for (size_t m = 1; m < f.coeff.size(); ++m)
        if (f.coeff[m] != 0) s += f.coeff[m] * values[m];
    return s;
}

std::string subset_name(unsigned mask, std::span<const std::string> names) {
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (mask & (1u << i)) {
            if (!out.empty()) out += ',';
            out += names[i];
        }
    }
    return out;
}

}  // namespace iitk
