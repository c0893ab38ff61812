#include "iitk/dist.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace iitk {

int MassFunction::var_index(std::string_view name) const {
    for (size_t i = 0; i < var_names.size(); ++i)
        if (var_names[i] == name) return static_cast<int>(i);
    return -1;
}

Rational MassFunction::total() const {
    Rational t = 0;
    for (const auto& [o, p] : mass) t += p;
    return t;
}

std::map<Outcome, Rational> project_mass(const MassFunction& m, unsigned mask) {
    std::map<Outcome, Rational> out;
    Outcome key;
    for (const auto& [o, p] : m.mass) {
        key.clear();
        for (int i = 0; i < m.arity(); ++i)
            if (mask & (1u << i)) key.push_back(o[i]);
        auto [it, inserted] = out.emplace(key, p);
        if (!inserted) it->second += p;
    }
    return out;
}

JointDist JointDist::from_mass(MassFunction m, bool renormalized) {
    if (m.var_names.empty()) throw std::invalid_argument("distribution has no variables");
    if (m.alphabet_sizes.size() != m.var_names.size())
        throw std::invalid_argument("alphabet count does not match variable count");
    for (unsigned k : m.alphabet_sizes)
        if (k == 0) throw std::invalid_argument("alphabet sizes must be positive");

    for (auto it = m.mass.begin(); it != m.mass.end();) {
        const auto& [o, p] = *it;
        if (o.size() != m.var_names.size())
            throw std::invalid_argument("outcome arity does not match variable count");
        for (size_t i = 0; i < o.size(); ++i)
            if (o[i] >= m.alphabet_sizes[i])
                throw std::invalid_argument("label " + std::to_string(o[i]) +
                                            " out of range for variable " + m.var_names[i]);
        if (p < 0) throw std::invalid_argument("negative probability mass");
        it = (p == 0) ? m.mass.erase(it) : std::next(it);
    }
    if (m.total() != 1) throw std::invalid_argument("masses do not sum to 1");

    JointDist d;
    d.m_ = std::move(m);
    d.renormalized_ = renormalized;
    return d;
}

JointDist JointDist::marginal_mask(unsigned mask) const {
    if (mask == 0) throw std::invalid_argument("empty variable subset");
    if (mask >= (1u << arity())) throw std::invalid_argument("variable mask out of range");
    MassFunction r;
    for (int i = 0; i < arity(); ++i) {
        if (mask & (1u << i)) {
            r.var_names.push_back(m_.var_names[i]);
            r.alphabet_sizes.push_back(m_.alphabet_sizes[i]);
        }
    }
    r.mass = project_mass(m_, mask);
    return from_mass(std::move(r), renormalized_);
}

JointDist JointDist::marginal(std::span<const std::string> vars) const {
    if (vars.empty()) throw std::invalid_argument("empty variable subset");
    unsigned mask = 0;
    for (const auto& v : vars) {
        int i = m_.var_index(v);
        if (i < 0) throw std::invalid_argument("unknown variable: " + v);
        mask |= 1u << i;
    }
    return marginal_mask(mask);
}

namespace {

// Strips comments, splits into whitespace-separated token rows.
std::vector<std::vector<std::string>> tokenize_rows(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> row;
        std::string tok;
        while (ls >> tok) row.push_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

bool is_decimal_literal(const std::string& s) {
    return s.find('/') == std::string::npos &&
           s.find_first_of(".eE") != std::string::npos;
}

}  // namespace

JointDist parse_dist(std::string_view text) {
    auto rows = tokenize_rows(text);
    if (rows.empty() || rows[0][0] != "vars")
        throw std::invalid_argument("distribution file must start with a 'vars' line");
    if (rows[0].size() < 2) throw std::invalid_argument("'vars' line lists no variables");

    MassFunction m;
    m.var_names.assign(rows[0].begin() + 1, rows[0].end());
    {
        std::set<std::string> seen(m.var_names.begin(), m.var_names.end());
        if (seen.size() != m.var_names.size())
            throw std::invalid_argument("duplicate variable name in 'vars' line");
    }
    const size_t n = m.var_names.size();

    size_t first_data = 1;
    bool have_alphabets = rows.size() > 1 && rows[1][0] == "alphabets";
    if (have_alphabets) {
        if (rows[1].size() != n + 1)
            throw std::invalid_argument("'alphabets' line must list one size per variable");
        for (size_t i = 1; i < rows[1].size(); ++i) {
            unsigned long k;
            try {
                k = std::stoul(rows[1][i]);
            } catch (...) {
                throw std::invalid_argument("malformed alphabet size: " + rows[1][i]);
            }
            if (k == 0) throw std::invalid_argument("alphabet sizes must be positive");
            m.alphabet_sizes.push_back(static_cast<unsigned>(k));
        }
        first_data = 2;
    }

    std::set<Outcome> seen_rows;
    std::vector<unsigned> max_label(n, 0);
    bool saw_decimal = false;
    for (size_t r = first_data; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != n + 1)
            throw std::invalid_argument("expected " + std::to_string(n) +
                                        " labels and a probability, got " +
                                        std::to_string(row.size()) + " fields");
        Outcome o(n);
        for (size_t i = 0; i < n; ++i) {
            unsigned long v;
            try {
                size_t used = 0;
                v = std::stoul(row[i], &used);
                if (used != row[i].size()) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("malformed label: " + row[i]);
            }
            o[i] = static_cast<unsigned>(v);
            max_label[i] = std::max(max_label[i], o[i]);
        }
        if (!seen_rows.insert(o).second)
            throw std::invalid_argument("duplicate outcome row");
        saw_decimal = saw_decimal || is_decimal_literal(row[n]);
        Rational p = parse_rational(row[n]);
        if (p < 0) throw std::invalid_argument("negative probability mass");
        if (p > 0) m.mass.emplace(std::move(o), std::move(p));
    }

    if (!have_alphabets)
        for (size_t i = 0; i < n; ++i) m.alphabet_sizes.push_back(max_label[i] + 1);
    for (const auto& [o, p] : m.mass)
        for (size_t i = 0; i < n; ++i)
            if (o[i] >= m.alphabet_sizes[i])
                throw std::invalid_argument("label " + std::to_string(o[i]) +
                                            " out of range for variable " + m.var_names[i]);

    Rational total = m.total();
    bool renormalized = false;
    if (total != 1) {
        if (!saw_decimal || std::fabs(to_double(total) - 1.0) > 1e-9)
            throw std::invalid_argument("masses sum to " + to_string(total) + ", not 1");
        for (auto& [o, p] : m.mass) p /= total;
        renormalized = true;
    }
    return JointDist::from_mass(std::move(m), renormalized);
}

std::string serialize_dist(const JointDist& d) {
    std::ostringstream out;
    out << "vars";
    for (const auto& v : d.var_names()) out << ' ' << v;
    out << "\nalphabets";
    for (unsigned k : d.alphabet_sizes()) out << ' ' << k;
    out << '\n';
    for (const auto& [o, p] : d.mass().mass) {
        for (unsigned l : o) out << l << ' ';
        out << to_string(p) << '\n';
    }
    return out.str();
}

double kl_divergence(const MassFunction& p, const MassFunction& q) {
    if (p.var_names != q.var_names)
        throw std::invalid_argument("KL divergence requires identical variable sets");
    double kl = 0.0;
    for (const auto& [o, pm] : p.mass) {
        auto it = q.mass.find(o);
        if (it == q.mass.end()) return std::numeric_limits<double>::infinity();
        // exact rational ratio before the log keeps near-1 ratios accurate
        kl += to_double(pm) * std::log2(to_double(Rational(pm / it->second)));
    }
    return kl;
}

}  // namespace iitk
