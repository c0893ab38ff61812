#include "iitk/exprlang.hpp"

#include <cctype>
#include <sstream>

namespace iitk {

namespace {

enum class Tok {
    Ident, Number, LParen, RParen, Comma, Colon, Pipe, Star, Slash,
    Plus, Minus, Le, Ge, Eq, Arrow, End,
};

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](Tok k, size_t start, size_t len) {
        out.push_back({k, std::string(s.substr(start, len)), start});
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i + 1;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            push(Tok::Ident, i, j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '.') {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                size_t k = j + 1;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    ++k;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    j = k;
                }
            }
            push(Tok::Number, i, j - i);
            i = j;
            continue;
        }
        switch (c) {
            case '(': push(Tok::LParen, i, 1); ++i; break;
            case ')': push(Tok::RParen, i, 1); ++i; break;
            case ',': push(Tok::Comma, i, 1); ++i; break;
            case ':': push(Tok::Colon, i, 1); ++i; break;
            case '|': push(Tok::Pipe, i, 1); ++i; break;
            case '*': push(Tok::Star, i, 1); ++i; break;
            case '/': push(Tok::Slash, i, 1); ++i; break;
            case '+': push(Tok::Plus, i, 1); ++i; break;
            case '-': push(Tok::Minus, i, 1); ++i; break;
            case '<':
                if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::Le, i, 2); i += 2; }
                else throw ParseError("expected '<='", i);
                break;
            case '>':
                if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::Ge, i, 2); i += 2; }
                else throw ParseError("expected '>='", i);
                break;
            case '=':
                if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::Arrow, i, 2); i += 2; }
                else { push(Tok::Eq, i, 1); ++i; }
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    InfoExpr expr_document() {
        InfoExpr e = linexpr();
        expect(Tok::End, "end of input");
        return e;
    }

    Statement stmt_document() {
        Statement st;
        InfoExpr first = linexpr();
        while (cur().kind == Tok::Eq) {
            next();
            Token z = expect(Tok::Number, "'0'");
            if (parse_coef_token(z) != 0) throw ParseError("constraints must equal 0", z.pos);
            st.constraints.push_back(std::move(first));
            if (cur().kind == Tok::Comma) {
                next();
                first = linexpr();
                continue;
            }
            expect(Tok::Arrow, "'=>'");
            first = linexpr();
            break;
        }
        if (cur().kind == Tok::Le) st.rel = Statement::Rel::Le;
        else if (cur().kind == Tok::Ge) st.rel = Statement::Rel::Ge;
        else throw ParseError("expected '<=', '>=' or '='", cur().pos);
        next();
        st.lhs = std::move(first);
        st.rhs = linexpr();
        expect(Tok::End, "end of input");
        return st;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& peek() const { return toks_[std::min(i_ + 1, toks_.size() - 1)]; }
    void next() { if (i_ + 1 < toks_.size()) ++i_; }

    Token expect(Tok k, const char* what) {
        if (cur().kind != k) throw ParseError(std::string("expected ") + what, cur().pos);
        Token t = cur();
        next();
        return t;
    }

    Rational parse_coef_token(const Token& t) {
        try {
            return parse_rational(t.text);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed number '" + t.text + "'", t.pos);
        }
    }

    // coef := INT ["/" INT] | DECIMAL  (the current token is the first number)
    Rational coef() {
        Token t = expect(Tok::Number, "number");
        if (cur().kind == Tok::Slash && peek().kind == Tok::Number) {
            next();
            Token d = expect(Tok::Number, "number");
            try {
                return parse_rational(t.text + "/" + d.text);
            } catch (const std::invalid_argument&) {
                throw ParseError("malformed fraction '" + t.text + "/" + d.text + "'", t.pos);
            }
        }
        return parse_coef_token(t);
    }

    std::vector<std::string> varlist() {
        std::vector<std::string> vs;
        vs.push_back(expect(Tok::Ident, "identifier").text);
        while (cur().kind == Tok::Comma) {
            next();
            vs.push_back(expect(Tok::Ident, "identifier").text);
        }
        return vs;
    }

    Quantity quant() {
        Token head = expect(Tok::Ident, "'H' or 'I'");
        Quantity q;
        if (head.text == "H") q.kind = Quantity::Kind::Entropy;
        else if (head.text == "I") q.kind = Quantity::Kind::Mutual;
        else throw ParseError("expected 'H' or 'I'", head.pos);
        expect(Tok::LParen, "'('");
        q.primary = varlist();
        if (q.kind == Quantity::Kind::Mutual) {
            expect(Tok::Colon, "':'");
            q.secondary = varlist();
        }
        if (cur().kind == Tok::Pipe) {
            next();
            q.condition = varlist();
        }
        expect(Tok::RParen, "')'");
        return q;
    }

    bool at_quant() const {
        return cur().kind == Tok::Ident && (cur().text == "H" || cur().text == "I") &&
               peek().kind == Tok::LParen;
    }

    // sterm with an already-applied sign; adds into e.
    void sterm(InfoExpr& e, int sign) {
        if (at_quant()) {
            e.terms.push_back({Rational(sign), quant()});
            return;
        }
        if (cur().kind != Tok::Number)
            throw ParseError("expected a quantity or a number", cur().pos);
        Rational c = coef();
        if (sign < 0) c = -c;
        if (cur().kind == Tok::Star) {
            next();
            if (!at_quant()) throw ParseError("expected 'H(...)' or 'I(...)'", cur().pos);
            e.terms.push_back({std::move(c), quant()});
        } else {
            e.constant += c;
        }
    }

    InfoExpr linexpr() {
        InfoExpr e;
        int sign = 1;
        if (cur().kind == Tok::Plus) next();
        else if (cur().kind == Tok::Minus) { sign = -1; next(); }
        sterm(e, sign);
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            sign = cur().kind == Tok::Plus ? 1 : -1;
            next();
            sterm(e, sign);
        }
        return e;
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

std::string join(const std::vector<std::string>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += vs[i];
    }
    return out;
}

std::string quant_str(const Quantity& q) {
    std::string out;
    if (q.kind == Quantity::Kind::Entropy) {
        out = "H(" + join(q.primary);
    } else {
        out = "I(" + join(q.primary) + ":" + join(q.secondary);
    }
    if (!q.condition.empty()) out += "|" + join(q.condition);
    return out + ")";
}

void add_vars(std::vector<std::string>& order, const std::vector<std::string>& vs) {
    for (const auto& v : vs)
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
}

void collect_into(std::vector<std::string>& order, const InfoExpr& e) {
    for (const auto& t : e.terms) {
        add_vars(order, t.quantity.primary);
        add_vars(order, t.quantity.secondary);
        add_vars(order, t.quantity.condition);
    }
}

}  // namespace

InfoExpr parse_expr(std::string_view text) { return Parser(text).expr_document(); }
Statement parse_stmt(std::string_view text) { return Parser(text).stmt_document(); }

std::string pretty_print(const InfoExpr& e) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : e.terms) {
        Rational a = abs(t.coef);
        if (first) {
            if (t.coef < 0) out << '-';
        } else {
            out << (t.coef < 0 ? " - " : " + ");
        }
        if (a != 1) out << to_string(a) << '*';
        out << quant_str(t.quantity);
        first = false;
    }
    if (e.constant != 0 || first) {
        if (first) {
            out << to_string(e.constant);
        } else {
            out << (e.constant < 0 ? " - " : " + ") << to_string(abs(e.constant));
        }
    }
    return out.str();
}

std::string pretty_print(const Statement& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.constraints.size(); ++i) {
        if (i) out << ", ";
        out << pretty_print(s.constraints[i]) << " = 0";
    }
    if (!s.constraints.empty()) out << " => ";
    out << pretty_print(s.lhs) << (s.rel == Statement::Rel::Le ? " <= " : " >= ")
        << pretty_print(s.rhs);
    return out.str();
}

std::vector<std::string> collect_vars(const InfoExpr& e) {
    std::vector<std::string> order;
    collect_into(order, e);
    return order;
}

std::vector<std::string> collect_vars(const Statement& s) {
    std::vector<std::string> order;
    for (const auto& c : s.constraints) collect_into(order, c);
    collect_into(order, s.lhs);
    collect_into(order, s.rhs);
    return order;
}

LinearForm canonicalize(const InfoExpr& e, std::span<const std::string> vars) {
    if (e.constant != 0)
        throw std::invalid_argument("constant term is not representable in a linear entropy form");
    const int n = static_cast<int>(vars.size());
    LinearForm f(n);
    auto mask_of = [&](const std::vector<std::string>& vs) {
        unsigned m = 0;
        for (const auto& v : vs) {
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end()) throw std::invalid_argument("unknown variable: " + v);
            m |= 1u << (it - vars.begin());
        }
        return m;
    };
    auto add = [&](unsigned mask, const Rational& c) {
        if (mask != 0) f[mask] += c;
    };
    for (const auto& t : e.terms) {
        const auto& q = t.quantity;
        unsigned u = mask_of(q.condition);
        if (q.kind == Quantity::Kind::Entropy) {
            unsigned s = mask_of(q.primary);
            add(s | u, t.coef);
            add(u, -t.coef);
        } else {
            unsigned s = mask_of(q.primary), tt = mask_of(q.secondary);
            add(s | u, t.coef);
            add(tt | u, t.coef);
            add(s | tt | u, -t.coef);
            add(u, -t.coef);
        }
    }
    return f;
}

LinearForm goal_form(const Statement& s, std::span<const std::string> vars) {
    if (s.rhs.constant != s.lhs.constant)
        throw std::invalid_argument("constant term is not representable in a linear entropy form");
    LinearForm l = canonicalize({s.lhs.terms, 0}, vars);
    LinearForm r = canonicalize({s.rhs.terms, 0}, vars);
    return s.rel == Statement::Rel::Le ? r - l : l - r;
}

std::vector<LinearForm> constraint_forms(const Statement& s, std::span<const std::string> vars) {
    std::vector<LinearForm> out;
    out.reserve(s.constraints.size());
    for (const auto& c : s.constraints) out.push_back(canonicalize(c, vars));
    return out;
}

}  // namespace iitk
