#include "iitk/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace iitk {

double entropy_bits(const std::map<Outcome, Rational>& mass) {
    double h = 0.0;
    for (const auto& [o, p] : mass) {
        double pd = to_double(p);
        if (pd <= 0.0) continue;  // exact-positive mass can still underflow
        h -= pd * std::log2(pd);
    }
    return h;
}

EntropyVector entropy_profile(const JointDist& d) {
    const int n = d.arity();
    EntropyVector v;
    v.n = n;
    v.h.assign(size_t(1) << n, 0.0);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        v.h[mask] = entropy_bits(project_mass(d.mass(), mask));
    return v;
}

std::vector<EntropyVector> entropy_profiles_serial(std::span<const JointDist> ds) {
    std::vector<EntropyVector> out(ds.size());
    for (size_t i = 0; i < ds.size(); ++i) out[i] = entropy_profile(ds[i]);
    return out;
}

std::vector<EntropyVector> entropy_profiles(std::span<const JointDist> ds) {
    std::vector<EntropyVector> out(ds.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(ds.size()); ++i)
        out[i] = entropy_profile(ds[i]);
    return out;
}

double eval_form(const EntropyVector& v, const LinearForm& f) {
    if (v.n != f.n) throw std::invalid_argument("profile/form dimension mismatch");
    double s = 0.0;
    for (size_t m = 1; m < f.coeff.size(); ++m)
        if (f.coeff[m] != 0) s += to_double(f.coeff[m]) * v.h[m];
    return s;
}

}  // namespace iitk
