#pragma once

#include "iitk/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace iitk {

using Outcome = std::vector<unsigned>;

// Mass function over tuples of finitely many labelled variables. Only
// strictly positive masses are stored; absent outcomes carry mass zero.
// No normalization requirement (hat_transform produces sub- or
// super-normalized functions).
struct MassFunction {
    std::vector<std::string> var_names;
    std::vector<unsigned> alphabet_sizes;  // one per variable, >= 1
    std::map<Outcome, Rational> mass;      // lexicographic outcome order

    int arity() const { return static_cast<int>(var_names.size()); }
    int var_index(std::string_view name) const;  // -1 if unknown
    Rational total() const;
};

// Projection of the raw mass map onto the variables selected by mask
// (variable i <-> bit i). Exact rational accumulation.
std::map<Outcome, Rational> project_mass(const MassFunction& m, unsigned mask);

// A MassFunction whose masses sum to exactly 1. Immutable once built.
class JointDist {
public:
    // Validates labels against alphabets, drops exact-zero atoms, rejects
    // negative masses, and requires total mass exactly 1.
    static JointDist from_mass(MassFunction m, bool renormalized = false);

    const MassFunction& mass() const { return m_; }
    const std::vector<std::string>& var_names() const { return m_.var_names; }
    const std::vector<unsigned>& alphabet_sizes() const { return m_.alphabet_sizes; }
    int arity() const { return m_.arity(); }

    // True when the parser rescaled decimal input whose masses summed to
    // 1 only within tolerance.
    bool renormalized() const { return renormalized_; }

    JointDist marginal(std::span<const std::string> vars) const;
    JointDist marginal_mask(unsigned mask) const;

private:
    JointDist() = default;
    MassFunction m_;
    bool renormalized_ = false;
};

// Distribution file format:
//   # comment to end of line
//   vars <name1> <name2> ...
//   alphabets <k1> <k2> ...          (optional; default 1 + max label seen)
//   <label1> ... <labelN> <prob>     (prob = p/q or decimal literal)
// Rows with probability 0 are accepted and dropped. All-rational input
// must sum to exactly 1; if any decimal appears, a 1e-9 tolerance applies
// and the result is renormalized and flagged.
JointDist parse_dist(std::string_view text);

// Rows sorted lexicographically by labels, probabilities as reduced
// fractions; includes the alphabets line. parse(serialize(d)) == d.
std::string serialize_dist(const JointDist& d);

// Kullback-Leibler divergence in bits: sum p(x) log2(p(x)/q(x)) with the
// 0 log 0 = 0 convention. Returns +inf if some p(x) > 0 has q(x) = 0.
// Nonnegative whenever p is normalized and q sub-normalized.
double kl_divergence(const MassFunction& p, const MassFunction& q);

}  // namespace iitk
