#pragma once

// A small expression language over q and t so series can be defined and
// compared from the command line without recompiling.
//
//   expr   := term (("+"|"-") term)* ;
//   term   := pow (("*"|"/") pow)* ;
//   pow    := atom ("^" integer)? ;
//   atom   := integer | "q" | "t" | call | "(" expr ")" ;
//   call   := name "(" args? ")" ;
//   args   := arg ("," arg)* ;  arg := ["-"] integer | "[" args "]" ;
//
// Builtins map one-to-one onto library operations.  Integers are arbitrary
// precision; whitespace is insignificant; division requires a unit constant
// term.  (A leading "-" on a call argument is accepted so that evaluation
// points like a = 1/q, i.e. efun(..., -1), are expressible.)

#include "qcensus/census.hpp"
#include "qcensus/characters.hpp"

#include <cctype>
#include <memory>
#include <variant>

namespace qcensus::dsl {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, int col, std::vector<std::string> expected, const std::string& found)
        : std::runtime_error(render(line, col, expected, found)),
          line_(line),
          col_(col),
          expected_(std::move(expected)) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string render(int line, int col, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += expected.size() == 2 ? " or " : (i + 1 == expected.size() ? ", or " : ", ");
            msg += expected[i];
        }
        msg += "; found " + found;
        return msg;
    }

    int line_;
    int col_;
    std::vector<std::string> expected_;
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;
using CallArg = std::variant<Int, std::vector<Int>>;

struct Ast {
    enum class Kind { Number, VarQ, VarT, Add, Sub, Mul, Div, Pow, Call };
    Kind kind = Kind::Number;
    Int number;
    AstPtr lhs;
    AstPtr rhs;
    long long exponent = 0;
    std::string callee;
    std::vector<CallArg> args;
};

// Builtin table: argument signature uses 'i' for an integer and 'v' for a
// bracketed integer vector.
struct BuiltinSpec {
    const char* name;
    const char* args;
    bool bivariate_result;
};

inline const std::vector<BuiltinSpec>& builtins() {
    static const std::vector<BuiltinSpec> specs = {
        {"posq", "i", false},      // prod (1 + q^{cn})
        {"etaq", "i", false},      // prod (1 - q^{cn})
        {"resprod", "iv", false},  // prod over n mod M in set of (1 - q^n)^{-1}
        {"virasoro", "iiii", false},
        {"jfun", "iii", false},
        {"efun", "iii", false},
        {"rho", "ii", false},
        {"h0", "iiiv", false},
        {"poincare", "iiiv", true},
        {"qbin", "ii", false},
    };
    return specs;
}

inline const BuiltinSpec* find_builtin(const std::string& name) {
    for (const BuiltinSpec& spec : builtins())
        if (name == spec.name) return &spec;
    return nullptr;
}

namespace detail {

struct Token {
    enum class Kind { Integer, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };
    Kind kind = Kind::End;
    Int value;
    std::string text;
    int line = 1;
    int col = 1;
};

inline const char* token_label(Token::Kind k) {
    switch (k) {
        case Token::Kind::Integer: return "an integer";
        case Token::Kind::Name: return "a name";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::LBracket: return "'['";
        case Token::Kind::RBracket: return "']'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

inline std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of input";
    return "'" + t.text + "'";
}

inline std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t pos = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++pos;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            tok.kind = Token::Kind::Integer;
            tok.text = text.substr(pos, end - pos);
            tok.value = Int(tok.text);
            for (std::size_t k = pos; k < end; ++k) advance(text[k]);
            pos = end;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) ++end;
            tok.kind = Token::Kind::Name;
            tok.text = text.substr(pos, end - pos);
            for (std::size_t k = pos; k < end; ++k) advance(text[k]);
            pos = end;
        } else {
            tok.text = std::string(1, c);
            switch (c) {
                case '+': tok.kind = Token::Kind::Plus; break;
                case '-': tok.kind = Token::Kind::Minus; break;
                case '*': tok.kind = Token::Kind::Star; break;
                case '/': tok.kind = Token::Kind::Slash; break;
                case '^': tok.kind = Token::Kind::Caret; break;
                case '(': tok.kind = Token::Kind::LParen; break;
                case ')': tok.kind = Token::Kind::RParen; break;
                case '[': tok.kind = Token::Kind::LBracket; break;
                case ']': tok.kind = Token::Kind::RBracket; break;
                case ',': tok.kind = Token::Kind::Comma; break;
                default:
                    throw SyntaxError(line, col, {"a token"}, "'" + std::string(1, c) + "'");
            }
            advance(c);
            ++pos;
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.col = col;
    out.push_back(std::move(end));
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    AstPtr parse() {
        AstPtr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool accept(Token::Kind kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Token::Kind kind, const char* what) {
        if (peek().kind != kind)
            throw SyntaxError(peek().line, peek().col, {what}, describe(peek()));
        return advance();
    }

    AstPtr expr() {
        AstPtr left = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const bool plus = advance().kind == Token::Kind::Plus;
            auto node = std::make_shared<Ast>();
            node->kind = plus ? Ast::Kind::Add : Ast::Kind::Sub;
            node->lhs = std::move(left);
            node->rhs = term();
            left = std::move(node);
        }
        return left;
    }

    AstPtr term() {
        AstPtr left = pow();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            const bool mul = advance().kind == Token::Kind::Star;
            auto node = std::make_shared<Ast>();
            node->kind = mul ? Ast::Kind::Mul : Ast::Kind::Div;
            node->lhs = std::move(left);
            node->rhs = pow();
            left = std::move(node);
        }
        return left;
    }

    AstPtr pow() {
        AstPtr base = atom();
        if (accept(Token::Kind::Caret)) {
            const Token& e = expect(Token::Kind::Integer, "an integer exponent");
            auto node = std::make_shared<Ast>();
            node->kind = Ast::Kind::Pow;
            node->lhs = std::move(base);
            if (e.value > std::numeric_limits<long long>::max())
                throw SyntaxError(e.line, e.col, {"a smaller exponent"}, "'" + e.text + "'");
            node->exponent = e.value.convert_to<long long>();
            return node;
        }
        return base;
    }

    AstPtr atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Integer) {
            advance();
            auto node = std::make_shared<Ast>();
            node->kind = Ast::Kind::Number;
            node->number = t.value;
            return node;
        }
        if (t.kind == Token::Kind::Name) {
            advance();
            if (t.text == "q" && peek().kind != Token::Kind::LParen) {
                auto node = std::make_shared<Ast>();
                node->kind = Ast::Kind::VarQ;
                return node;
            }
            if (t.text == "t" && peek().kind != Token::Kind::LParen) {
                auto node = std::make_shared<Ast>();
                node->kind = Ast::Kind::VarT;
                return node;
            }
            return call(t);
        }
        if (t.kind == Token::Kind::LParen) {
            advance();
            AstPtr inner = expr();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        throw SyntaxError(t.line, t.col, {"an integer", "'q'", "'t'", "a builtin call", "'('"},
                          describe(t));
    }

    AstPtr call(const Token& name) {
        const BuiltinSpec* spec = find_builtin(name.text);
        if (!spec)
            throw SyntaxError(name.line, name.col, {"a builtin name"}, "'" + name.text + "'");
        expect(Token::Kind::LParen, "'('");
        auto node = std::make_shared<Ast>();
        node->kind = Ast::Kind::Call;
        node->callee = name.text;
        if (peek().kind != Token::Kind::RParen) {
            node->args.push_back(arg());
            while (accept(Token::Kind::Comma)) node->args.push_back(arg());
        }
        const Token& close = expect(Token::Kind::RParen, "')'");
        const std::string sig = spec->args;
        if (node->args.size() != sig.size())
            throw SyntaxError(close.line, close.col,
                              {std::string(spec->name) + " with " + std::to_string(sig.size()) + " argument(s)"},
                              std::to_string(node->args.size()) + " argument(s)");
        for (std::size_t i = 0; i < sig.size(); ++i) {
            const bool want_vec = sig[i] == 'v';
            const bool is_vec = std::holds_alternative<std::vector<Int>>(node->args[i]);
            if (want_vec != is_vec)
                throw SyntaxError(close.line, close.col,
                                  {std::string(want_vec ? "a vector" : "an integer") + " for argument " +
                                   std::to_string(i + 1) + " of " + spec->name},
                                  is_vec ? "a vector" : "an integer");
        }
        return node;
    }

    CallArg arg() {
        if (accept(Token::Kind::LBracket)) {
            std::vector<Int> items;
            items.push_back(signed_integer());
            while (accept(Token::Kind::Comma)) items.push_back(signed_integer());
            expect(Token::Kind::RBracket, "']'");
            return items;
        }
        if (peek().kind == Token::Kind::Integer || peek().kind == Token::Kind::Minus)
            return signed_integer();
        throw SyntaxError(peek().line, peek().col, {"an integer", "'['"}, describe(peek()));
    }

    Int signed_integer() {
        const bool negative = accept(Token::Kind::Minus);
        const Token& t = expect(Token::Kind::Integer, "an integer");
        return negative ? Int(-t.value) : t.value;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline AstPtr parse(const std::string& text) {
    return detail::Parser(detail::lex(text)).parse();
}

inline bool uses_t(const Ast& ast) {
    switch (ast.kind) {
        case Ast::Kind::VarT: return true;
        case Ast::Kind::Call: {
            const BuiltinSpec* spec = find_builtin(ast.callee);
            return spec && spec->bivariate_result;
        }
        case Ast::Kind::Add:
        case Ast::Kind::Sub:
        case Ast::Kind::Mul:
        case Ast::Kind::Div:
            return uses_t(*ast.lhs) || uses_t(*ast.rhs);
        case Ast::Kind::Pow:
            return uses_t(*ast.lhs);
        default:
            return false;
    }
}

// Canonical printer; parse(print(parse(x))) reproduces the tree.
inline std::string print(const Ast& ast) {
    auto rec = [](auto&& self, const Ast& node, int parent_prec) -> std::string {
        auto wrap = [&](int prec, const std::string& text) {
            return prec < parent_prec ? "(" + text + ")" : text;
        };
        switch (node.kind) {
            case Ast::Kind::Number: return node.number.str();
            case Ast::Kind::VarQ: return "q";
            case Ast::Kind::VarT: return "t";
            case Ast::Kind::Add:
                return wrap(1, self(self, *node.lhs, 1) + "+" + self(self, *node.rhs, 2));
            case Ast::Kind::Sub:
                return wrap(1, self(self, *node.lhs, 1) + "-" + self(self, *node.rhs, 2));
            case Ast::Kind::Mul:
                return wrap(2, self(self, *node.lhs, 2) + "*" + self(self, *node.rhs, 3));
            case Ast::Kind::Div:
                return wrap(2, self(self, *node.lhs, 2) + "/" + self(self, *node.rhs, 3));
            case Ast::Kind::Pow:
                return wrap(3, self(self, *node.lhs, 4) + "^" + std::to_string(node.exponent));
            case Ast::Kind::Call: {
                std::string out = node.callee + "(";
                for (std::size_t i = 0; i < node.args.size(); ++i) {
                    if (i) out += ",";
                    if (std::holds_alternative<Int>(node.args[i])) {
                        out += std::get<Int>(node.args[i]).str();
                    } else {
                        out += "[";
                        const auto& vec = std::get<std::vector<Int>>(node.args[i]);
                        for (std::size_t k = 0; k < vec.size(); ++k) {
                            if (k) out += ",";
                            out += vec[k].str();
                        }
                        out += "]";
                    }
                }
                return out + ")";
            }
        }
        return {};
    };
    return rec(rec, ast, 0);
}

namespace detail {

inline int arg_int(const std::vector<CallArg>& args, std::size_t index, const char* who) {
    const Int& v = std::get<Int>(args[index]);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw std::invalid_argument(std::string(who) + ": argument out of range");
    return v.convert_to<int>();
}

inline std::vector<int> arg_vec(const std::vector<CallArg>& args, std::size_t index, const char* who) {
    std::vector<int> out;
    for (const Int& v : std::get<std::vector<Int>>(args[index])) {
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw std::invalid_argument(std::string(who) + ": vector entry out of range");
        out.push_back(v.convert_to<int>());
    }
    return out;
}

inline Series eval_builtin_series(const Ast& node, int order, CellCensus& census) {
    const std::string& name = node.callee;
    const auto& args = node.args;
    if (name == "posq" || name == "etaq") {
        const int scale = arg_int(args, 0, name.c_str());
        if (scale < 1) throw std::invalid_argument(name + ": scale must be >= 1");
        return residue_product(1, {0}, name == "posq" ? ProductMode::Plus : ProductMode::Minus,
                               scale, order);
    }
    if (name == "resprod") {
        const int modulus = arg_int(args, 0, "resprod");
        std::set<int> allowed;
        for (int r : arg_vec(args, 1, "resprod")) allowed.insert(r);
        return residue_product(modulus, allowed, ProductMode::Reciprocal, 1, order);
    }
    if (name == "virasoro")
        return virasoro_char({arg_int(args, 0, "virasoro"), arg_int(args, 1, "virasoro"),
                              arg_int(args, 2, "virasoro"), arg_int(args, 3, "virasoro")},
                             order);
    if (name == "jfun")
        return andrews_j(arg_int(args, 0, "jfun"), arg_int(args, 1, "jfun"), arg_int(args, 2, "jfun"),
                         order);
    if (name == "efun")
        return corteel_e(arg_int(args, 0, "efun"), arg_int(args, 1, "efun"), arg_int(args, 2, "efun"),
                         order);
    if (name == "rho")
        return fermionic_rho_sum(arg_int(args, 0, "rho"), arg_int(args, 1, "rho"), order);
    if (name == "h0") {
        const int r = arg_int(args, 0, "h0");
        std::vector<int> w = arg_vec(args, 3, "h0");
        if (static_cast<int>(w.size()) != r)
            throw std::invalid_argument("h0: weight vector length must equal the rank");
        return census.h0_series(Cocharacter(arg_int(args, 1, "h0"), arg_int(args, 2, "h0"), std::move(w)),
                                order);
    }
    if (name == "qbin")
        return q_binomial(arg_int(args, 0, "qbin"), arg_int(args, 1, "qbin")).padded(order);
    throw std::invalid_argument("builtin '" + name + "' does not produce a univariate series");
}

inline Series eval_series(const Ast& node, int order, CellCensus& census) {
    switch (node.kind) {
        case Ast::Kind::Number: return Series::monomial(0, node.number, order);
        case Ast::Kind::VarQ: return Series::monomial(1, 1, order);
        case Ast::Kind::VarT:
            throw std::invalid_argument("the variable t requires a t-order");
        case Ast::Kind::Add: return eval_series(*node.lhs, order, census) + eval_series(*node.rhs, order, census);
        case Ast::Kind::Sub: return eval_series(*node.lhs, order, census) - eval_series(*node.rhs, order, census);
        case Ast::Kind::Mul: return eval_series(*node.lhs, order, census) * eval_series(*node.rhs, order, census);
        case Ast::Kind::Div:
            return eval_series(*node.lhs, order, census) * eval_series(*node.rhs, order, census).inverse();
        case Ast::Kind::Pow: {
            Series base = eval_series(*node.lhs, order, census);
            Series acc = Series::one(order);
            for (long long e = node.exponent; e > 0; e >>= 1) {  // binary exponentiation
                if (e & 1) acc *= base;
                if (e > 1) base *= base;
            }
            return acc;
        }
        case Ast::Kind::Call: return eval_builtin_series(node, order, census);
    }
    throw std::logic_error("unreachable");
}

inline Bivariate eval_bivariate(const Ast& node, int order, int t_order, CellCensus& census) {
    switch (node.kind) {
        case Ast::Kind::Number: {
            Bivariate b(t_order, order);
            if (node.number != 0) b.coeff(0) = {node.number};
            return b;
        }
        case Ast::Kind::VarQ: {
            Bivariate b(t_order, order);
            b.coeff(0) = {Int(0), Int(1)};
            return b;
        }
        case Ast::Kind::VarT: {
            Bivariate b(t_order, order);
            if (t_order >= 1) b.coeff(1) = {Int(1)};
            return b;
        }
        case Ast::Kind::Add:
            return eval_bivariate(*node.lhs, order, t_order, census) +
                   eval_bivariate(*node.rhs, order, t_order, census);
        case Ast::Kind::Sub:
            return eval_bivariate(*node.lhs, order, t_order, census) -
                   eval_bivariate(*node.rhs, order, t_order, census);
        case Ast::Kind::Mul:
            return eval_bivariate(*node.lhs, order, t_order, census) *
                   eval_bivariate(*node.rhs, order, t_order, census);
        case Ast::Kind::Div:
            return eval_bivariate(*node.lhs, order, t_order, census) *
                   eval_bivariate(*node.rhs, order, t_order, census).inverse();
        case Ast::Kind::Pow: {
            Bivariate base = eval_bivariate(*node.lhs, order, t_order, census);
            Bivariate acc = Bivariate::one(t_order, order);
            for (long long e = node.exponent; e > 0; e >>= 1) {
                if (e & 1) acc *= base;
                if (e > 1) base *= base;
            }
            return acc;
        }
        case Ast::Kind::Call: {
            if (node.callee == "poincare") {
                const int r = arg_int(node.args, 0, "poincare");
                std::vector<int> w = arg_vec(node.args, 3, "poincare");
                if (static_cast<int>(w.size()) != r)
                    throw std::invalid_argument("poincare: weight vector length must equal the rank");
                return census
                    .poincare_series(Cocharacter(arg_int(node.args, 1, "poincare"),
                                                 arg_int(node.args, 2, "poincare"), std::move(w)),
                                     t_order)
                    .with_q_cap(order);
            }
            return Bivariate::from_series(eval_builtin_series(node, order, census), t_order);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// Evaluates the expression exactly: univariate at the given q-order, or --
// when t occurs -- bivariate at the t-order with q-degrees capped at the
// q-order.  Powers must be nonnegative; division requires a unit constant
// term; census refusals propagate.
inline SeriesValue evaluate(const Ast& ast, int order, std::optional<int> t_order = {},
                            CellCensus* census = nullptr) {
    if (order < 0) throw std::invalid_argument("evaluate: order must be >= 0");
    CellCensus local;
    CellCensus& cs = census ? *census : local;
    if (uses_t(ast)) {
        if (!t_order) throw std::invalid_argument("expression uses t: a t-order is required");
        return detail::eval_bivariate(ast, order, *t_order, cs);
    }
    return detail::eval_series(ast, order, cs);
}

}  // namespace qcensus::dsl
