#pragma once

#include "iitk/form.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace iitk {

// One elemental inequality. i == j encodes H(X_i | all others) >= 0,
// i < j encodes I(X_i : X_j | Z) >= 0 with Z = cond_mask.
struct Elemental {
    int i = 0, j = 0;
    unsigned cond_mask = 0;
    LinearForm form;
};

// The standard minimal elemental set; count is n + C(n,2) * 2^(n-2).
// Throws unless 1 <= n <= 6.
std::vector<Elemental> elemental_inequalities(int n);

std::string elemental_name(const Elemental& e, std::span<const std::string> names);

// goal == sum lambda_i * elemental_i + sum mu_j * constraint_j, exactly,
// with every lambda_i >= 0.
struct Certificate {
    std::vector<Rational> lambda;  // one per elemental
    std::vector<Rational> mu;      // one per constraint, sign-free
};

// Vector over subset bitmasks satisfying every elemental inequality and
// every constraint exactly, on which the goal evaluates strictly negative.
// Entries are integers (scaled by the LCM of denominators, reduced by the
// GCD of numerators).
struct PolymatroidWitness {
    int n = 0;
    std::vector<Rational> h;  // size 1 << n, h[0] = 0
};

using Decision = std::variant<Certificate, PolymatroidWitness>;

// Exact rational derivability test: is goal >= 0 a nonnegative combination
// of elemental inequalities plus sign-free multiples of the constraints?
// Phase-1 simplex with Bland's rule; the infeasible branch returns the
// Farkas dual as a witness. The returned object always passes its verifier.
Decision decide(const LinearForm& goal, std::span<const LinearForm> constraints);

bool verify_certificate(const Certificate& c, const LinearForm& goal,
                        std::span<const LinearForm> constraints);
bool verify_witness(const PolymatroidWitness& w, const LinearForm& goal,
                    std::span<const LinearForm> constraints);

}  // namespace iitk
