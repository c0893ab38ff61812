#pragma once

#include "iitk/form.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iitk {

// One information quantity: H(S|U) or I(S:T|U). The condition U may be
// empty; S (and T for mutual information) may not.
struct Quantity {
    enum class Kind { Entropy, Mutual };
    Kind kind = Kind::Entropy;
    std::vector<std::string> primary;    // S
    std::vector<std::string> secondary;  // T, mutual information only
    std::vector<std::string> condition;  // U

    friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct Term {
    Rational coef;
    Quantity quantity;

    friend bool operator==(const Term&, const Term&) = default;
};

// Linear combination of information quantities plus a rational constant
// (the constant exists so goals like ">= 0" parse; it cannot appear in a
// canonical form).
struct InfoExpr {
    std::vector<Term> terms;
    Rational constant = 0;

    friend bool operator==(const InfoExpr&, const InfoExpr&) = default;
};

// [constraints =>] lhs (<=|>=) rhs, each constraint asserted = 0.
struct Statement {
    enum class Rel { Le, Ge };
    std::vector<InfoExpr> constraints;
    InfoExpr lhs, rhs;
    Rel rel = Rel::Le;

    friend bool operator==(const Statement&, const Statement&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + msg),
          pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

// Grammar (whitespace insignificant between tokens):
//   stmt     := [constraints "=>"] ineq
//   constraints := eq { "," eq }
//   eq       := linexpr "=" "0"
//   ineq     := linexpr ("<=" | ">=") linexpr
//   linexpr  := ["+"|"-"] sterm { ("+"|"-") sterm }
//   sterm    := [coef "*"] quant | coef
//   coef     := INT ["/" INT] | DECIMAL
//   quant    := "H" "(" varlist ["|" varlist] ")"
//             | "I" "(" varlist ":" varlist ["|" varlist] ")"
//   varlist  := IDENT { "," IDENT }
InfoExpr parse_expr(std::string_view text);
Statement parse_stmt(std::string_view text);

std::string pretty_print(const InfoExpr& e);
std::string pretty_print(const Statement& s);

// Variables in first-appearance order (constraints, then lhs, then rhs).
std::vector<std::string> collect_vars(const InfoExpr& e);
std::vector<std::string> collect_vars(const Statement& s);

// Expands H(S|T) = H(S,T) - H(T) and I(S:T|U) = H(S,U) + H(T,U) -
// H(S,T,U) - H(U) over the given variable ordering and collects like
// subset terms. Throws on unknown variables and on a nonzero constant.
LinearForm canonicalize(const InfoExpr& e, std::span<const std::string> vars);

// The form asserted nonnegative by the goal: rhs - lhs for <=, lhs - rhs
// for >=.
LinearForm goal_form(const Statement& s, std::span<const std::string> vars);
std::vector<LinearForm> constraint_forms(const Statement& s, std::span<const std::string> vars);

}  // namespace iitk
