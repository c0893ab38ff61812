#pragma once

#include "iitk/dist.hpp"
#include "iitk/form.hpp"

namespace iitk {

// Shannon entropies (bits) of every nonempty variable subset, indexed by
// bitmask; h[0] = 0. Entropies are doubles computed from exact rational
// marginal masses.
struct EntropyVector {
    int n = 0;
    std::vector<double> h;  // size 1 << n

    double operator[](unsigned mask) const { return h[mask]; }
};

// -sum p log2 p over the map's values.
double entropy_bits(const std::map<Outcome, Rational>& mass);

EntropyVector entropy_profile(const JointDist& d);

// Batch kernel: distributes distributions across OpenMP threads. Output is
// identical to the serial reference for any thread count.
std::vector<EntropyVector> entropy_profiles(std::span<const JointDist> ds);
std::vector<EntropyVector> entropy_profiles_serial(std::span<const JointDist> ds);

// sum f[S] * v[S]; forms and profiles must share n.
double eval_form(const EntropyVector& v, const LinearForm& f);

}  // namespace iitk
