#pragma once

#include "iitk/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace iitk {

// Rational coefficient vector over nonempty variable subsets of an n-set,
// indexed by bitmask (variable i <-> bit i). Index 0 is unused and kept
// zero, so two forms are equal iff their coefficient vectors are equal.
struct LinearForm {
    int n = 0;
    std::vector<Rational> coeff;  // size 1 << n

    LinearForm() = default;
    explicit LinearForm(int n_) : n(n_), coeff(size_t(1) << n_) {}

    Rational& operator[](unsigned mask) { return coeff[mask]; }
    const Rational& operator[](unsigned mask) const { return coeff[mask]; }
    unsigned full_mask() const { return (1u << n) - 1; }

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& k);
    bool is_zero() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm operator+(LinearForm a, const LinearForm& b);
LinearForm operator-(LinearForm a, const LinearForm& b);
LinearForm operator*(const Rational& k, LinearForm f);

// Exact dot product with a vector indexed the same way (entry 0 ignored).
Rational dot(const LinearForm& f, std::span<const Rational> values);

// "A,C" for mask 0b101 over names {A,B,C}.
std::string subset_name(unsigned mask, std::span<const std::string> names);

}  // namespace iitk
