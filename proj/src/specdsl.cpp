#include "gammalin/specdsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gammalin {
namespace specdsl {

namespace {

enum class Tok { Ident, Int, Semi, Eq, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    unsigned line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    SourceSpan here() const { return {line, col, pos, pos}; }

    void advance() {
        if (pos < src.size() && src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_trivia() {
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        skip_trivia();
        SourceSpan span = here();
        if (pos >= src.size()) return {Tok::End, "", span};
        char c = src[pos];
        auto single = [&](Tok k) {
            advance();
            span.end = pos;
            return Token{k, std::string(1, c), span};
        };
        switch (c) {
            case ';': return single(Tok::Semi);
            case '=': return single(Tok::Eq);
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case '^': return single(Tok::Caret);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                text += src[pos];
                advance();
            }
            if (pos + 1 < src.size() && src[pos] == '/' &&
                std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
                // rational literal p/q
                text += src[pos];
                advance();
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                    text += src[pos];
                    advance();
                }
            }
            span.end = pos;
            return {Tok::Int, text, span};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                text += src[pos];
                advance();
            }
            span.end = pos;
            return {Tok::Ident, text, span};
        }
        throw parse_error(span, std::string("unexpected character '") + c + "'");
    }
};

const std::set<std::string> kKeywords = {"symbols", "vars",    "let",   "relation",
                                         "expand",  "reduce",  "permsum", "check", "zeta"};

bool is_symbol_name(const std::string& name) {
    return std::isupper(static_cast<unsigned char>(name[0]));
}

struct Parser {
    Lexer lex;
    Token cur;
    Program prog;
    std::set<std::string> declared_symbols, declared_vars, declared_lets;

    explicit Parser(const std::string& text) : lex(text) { cur = lex.next(); }

    void bump() { cur = lex.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = cur.kind == Tok::End ? "end of input" : "'" + cur.text + "'";
        throw parse_error(cur.span, "expected " + expected + ", found " + got);
    }

    void expect(Tok k, const std::string& what) {
        if (cur.kind != k) fail(what);
        bump();
    }

    std::string expect_ident() {
        if (cur.kind != Tok::Ident) fail("identifier");
        std::string name = cur.text;
        if (kKeywords.count(name)) throw parse_error(cur.span, "'" + name + "' is a keyword");
        bump();
        return name;
    }

    unsigned expect_int() {
        if (cur.kind != Tok::Int) fail("integer");
        unsigned v = static_cast<unsigned>(std::stoul(cur.text));
        bump();
        return v;
    }

    ExprPtr make(Expr::Kind kind, const SourceSpan& span) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->span = span;
        return e;
    }

    void check_declared(const std::string& name, const SourceSpan& span) {
        if (is_symbol_name(name)) {
            if (!declared_symbols.count(name))
                throw parse_error(span, "undeclared symbol '" + name + "'");
        } else if (!declared_vars.count(name) && !declared_lets.count(name)) {
            throw parse_error(span, "undeclared identifier '" + name + "'");
        }
    }

    ExprPtr parse_primary() {
        SourceSpan span = cur.span;
        if (cur.kind == Tok::LParen) {
            bump();
            ExprPtr e = parse_sum();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (cur.kind == Tok::Int) {
            auto e = make(Expr::Kind::Number, span);
            e->number = Rational::parse(cur.text);
            bump();
            return e;
        }
        if (cur.kind == Tok::Ident) {
            if (cur.text == "zeta") {
                bump();
                expect(Tok::LParen, "'(' after zeta");
                unsigned n = expect_int();
                if (n == 0) throw parse_error(span, "zeta order must be positive");
                expect(Tok::RParen, "')'");
                auto e = make(Expr::Kind::Zeta, span);
                e->zeta_order = n;
                return e;
            }
            if (kKeywords.count(cur.text)) fail("expression");
            auto e = make(Expr::Kind::Ident, span);
            e->name = cur.text;
            check_declared(e->name, span);
            bump();
            return e;
        }
        fail("expression");
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (cur.kind == Tok::Caret) {
            SourceSpan span = cur.span;
            bump();
            unsigned e = expect_int();
            if (e == 0) throw parse_error(span, "exponent must be positive");
            // X^3 desugars to X*X*X
            ExprPtr acc = base;
            for (unsigned i = 1; i < e; ++i) {
                auto m = make(Expr::Kind::Mul, base->span);
                m->lhs = acc;
                m->rhs = base;
                acc = m;
            }
            return acc;
        }
        return base;
    }

    ExprPtr parse_product() {
        ExprPtr acc = parse_power();
        while (cur.kind == Tok::Star) {
            SourceSpan span = cur.span;
            bump();
            auto m = make(Expr::Kind::Mul, span);
            m->lhs = acc;
            m->rhs = parse_power();
            acc = m;
        }
        return acc;
    }

    ExprPtr parse_sum() {
        ExprPtr acc;
        if (cur.kind == Tok::Minus) {
            SourceSpan span = cur.span;
            bump();
            auto n = make(Expr::Kind::Neg, span);
            n->lhs = parse_product();
            acc = n;
        } else {
            acc = parse_product();
        }
        while (cur.kind == Tok::Plus || cur.kind == Tok::Minus) {
            bool minus = cur.kind == Tok::Minus;
            SourceSpan span = cur.span;
            bump();
            auto b = make(minus ? Expr::Kind::Sub : Expr::Kind::Add, span);
            b->lhs = acc;
            b->rhs = parse_product();
            acc = b;
        }
        return acc;
    }

    void parse_stmt() {
        if (cur.kind != Tok::Ident) fail("statement");
        std::string kw = cur.text;
        SourceSpan span = cur.span;
        if (kw == "symbols") {
            bump();
            do {
                std::string name = expect_ident();
                if (!is_symbol_name(name))
                    throw parse_error(span, "symbol names must start uppercase: '" + name + "'");
                if (!declared_symbols.insert(name).second)
                    throw parse_error(span, "symbol '" + name + "' declared twice");
                prog.symbols.push_back(name);
            } while (cur.kind == Tok::Ident);
        } else if (kw == "vars") {
            bump();
            do {
                std::string name = expect_ident();
                if (is_symbol_name(name))
                    throw parse_error(span, "variable names must start lowercase: '" + name + "'");
                if (!declared_vars.insert(name).second)
                    throw parse_error(span, "variable '" + name + "' declared twice");
                prog.variables.push_back(name);
            } while (cur.kind == Tok::Ident);
        } else if (kw == "let") {
            bump();
            LetBinding b;
            b.span = span;
            b.name = expect_ident();
            if (is_symbol_name(b.name))
                throw parse_error(span, "let bindings must be lowercase: '" + b.name + "'");
            expect(Tok::Eq, "'='");
            b.value = parse_sum();
            declared_lets.insert(b.name);
            prog.lets.push_back(std::move(b));
        } else if (kw == "relation") {
            bump();
            Relation r;
            r.span = span;
            r.lhs = parse_sum();
            expect(Tok::Eq, "'='");
            r.rhs = parse_sum();
            prog.relations.push_back(std::move(r));
        } else if (kw == "expand" || kw == "reduce") {
            bump();
            Command c;
            c.kind = kw == "expand" ? Command::Kind::Expand : Command::Kind::Reduce;
            c.span = span;
            c.arg = parse_sum();
            prog.commands.push_back(std::move(c));
        } else if (kw == "permsum") {
            bump();
            Command c;
            c.kind = Command::Kind::PermSum;
            c.span = span;
            c.n = expect_int();
            c.k = expect_int();
            if (c.k > c.n) throw parse_error(span, "permsum: k must lie in [0, n]");
            prog.commands.push_back(std::move(c));
        } else if (kw == "check") {
            bump();
            Command c;
            c.kind = Command::Kind::Check;
            c.span = span;
            c.arg = parse_sum();
            expect(Tok::Eq, "'='");
            c.arg2 = parse_sum();
            prog.commands.push_back(std::move(c));
        } else {
            fail("statement keyword (symbols, vars, let, relation, expand, reduce, permsum, check)");
        }
        expect(Tok::Semi, "';'");
    }
};

// Evaluation context: let bindings resolved to scalars.
struct EvalContext {
    std::map<std::string, Scalar> lets;

    NCPoly eval(const ExprPtr& e) const {
        switch (e->kind) {
            case Expr::Kind::Number:
                return NCPoly::scalar(Scalar(e->number));
            case Expr::Kind::Zeta:
                return NCPoly::scalar(Scalar::zeta(e->zeta_order));
            case Expr::Kind::Ident: {
                if (is_symbol_name(e->name)) return NCPoly::symbol(e->name);
                auto it = lets.find(e->name);
                if (it != lets.end()) return NCPoly::scalar(it->second);
                return NCPoly::variable(e->name);
            }
            case Expr::Kind::Neg:
                return -eval(e->lhs);
            case Expr::Kind::Add:
                return eval(e->lhs) + eval(e->rhs);
            case Expr::Kind::Sub:
                return eval(e->lhs) - eval(e->rhs);
            case Expr::Kind::Mul:
                return eval(e->lhs) * eval(e->rhs);
        }
        throw error("internal: unhandled expression kind");
    }

    Scalar eval_scalar(const ExprPtr& e) const {
        NCPoly p = eval(e);
        if (p.is_zero()) return Scalar(0);
        if (p.term_count() != 1) throw parse_error(e->span, "expected a scalar expression");
        const auto& [key, coeff] = *p.terms().begin();
        if (!key.word.empty() || !key.mono.empty())
            throw parse_error(e->span, "expected a scalar expression");
        return coeff;
    }
};

EvalContext make_context(const Program& p) {
    EvalContext ctx;
    for (const auto& b : p.lets) ctx.lets[b.name] = ctx.eval_scalar(b.value);
    return ctx;
}

// Oriented rules extracted from the program, before the termination check.
std::vector<std::pair<Word, NCPoly>> oriented_rules(const Program& p, const EvalContext& ctx,
                                                    std::vector<SourceSpan>& spans) {
    std::vector<std::pair<Word, NCPoly>> rules;
    for (const auto& r : p.relations) {
        NCPoly lhs = ctx.eval(r.lhs);
        if (lhs.term_count() != 1)
            throw parse_error(r.span, "relation left side must be a single word");
        const auto& [key, coeff] = *lhs.terms().begin();
        if (!key.mono.empty() || !coeff.is_one() || key.word.empty())
            throw parse_error(r.span,
                              "relation left side must be a plain word with coefficient 1");
        rules.emplace_back(key.word, ctx.eval(r.rhs));
        spans.push_back(r.span);
    }
    return rules;
}

// Rules are taken as written; the term order behind the termination check
// is found by trying symbol orders, declaration order first. A rule set
// that decreases under no order is rejected with the violating rule.
RelationSet build_relations(const Program& p, const EvalContext& ctx) {
    std::vector<SourceSpan> spans;
    auto rules = oriented_rules(p, ctx, spans);

    std::vector<std::string> order = p.symbols;
    std::vector<unsigned> perm(order.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<unsigned>(i);

    std::string last_failure;
    SourceSpan last_span;
    const bool search = order.size() <= 8;  // desk scale; factorial is fine
    do {
        std::vector<std::string> candidate(order.size());
        for (size_t i = 0; i < order.size(); ++i) candidate[i] = order[perm[i]];
        RelationSet rs(candidate);
        bool ok = true;
        for (size_t i = 0; i < rules.size(); ++i) {
            try {
                rs.add_rule(rules[i].first, rules[i].second);
            } catch (const non_terminating_rule& e) {
                ok = false;
                last_failure = e.what();
                last_span = spans[i];
                break;
            }
        }
        if (ok) return rs;
    } while (search && std::next_permutation(perm.begin(), perm.end()));
    throw parse_error(last_span, last_failure);
}

}  // namespace

bool Expr::structurally_equal(const Expr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Number: return number == o.number;
        case Kind::Zeta: return zeta_order == o.zeta_order;
        case Kind::Ident: return name == o.name;
        case Kind::Neg: return lhs->structurally_equal(*o.lhs);
        default: return lhs->structurally_equal(*o.lhs) && rhs->structurally_equal(*o.rhs);
    }
}

bool Program::structurally_equal(const Program& o) const {
    if (symbols != o.symbols || variables != o.variables) return false;
    if (lets.size() != o.lets.size() || relations.size() != o.relations.size() ||
        commands.size() != o.commands.size())
        return false;
    for (size_t i = 0; i < lets.size(); ++i)
        if (lets[i].name != o.lets[i].name || !lets[i].value->structurally_equal(*o.lets[i].value))
            return false;
    for (size_t i = 0; i < relations.size(); ++i)
        if (!relations[i].lhs->structurally_equal(*o.relations[i].lhs) ||
            !relations[i].rhs->structurally_equal(*o.relations[i].rhs))
            return false;
    for (size_t i = 0; i < commands.size(); ++i) {
        const Command& a = commands[i];
        const Command& b = o.commands[i];
        if (a.kind != b.kind || a.n != b.n || a.k != b.k) return false;
        if ((a.arg == nullptr) != (b.arg == nullptr)) return false;
        if (a.arg && !a.arg->structurally_equal(*b.arg)) return false;
        if ((a.arg2 == nullptr) != (b.arg2 == nullptr)) return false;
        if (a.arg2 && !a.arg2->structurally_equal(*b.arg2)) return false;
    }
    return true;
}

Program parse(const std::string& text) {
    Parser parser(text);
    while (parser.cur.kind != Tok::End) parser.parse_stmt();
    // termination check at load time
    EvalContext ctx = make_context(parser.prog);
    build_relations(parser.prog, ctx);
    return parser.prog;
}

namespace {

// precedence: 0 sum, 1 product, 2 atom
std::string format_expr(const ExprPtr& e, int parent_prec) {
    auto wrap = [&](const std::string& s, int prec) {
        return prec < parent_prec ? "(" + s + ")" : s;
    };
    switch (e->kind) {
        case Expr::Kind::Number: return e->number.str();
        case Expr::Kind::Zeta: return "zeta(" + std::to_string(e->zeta_order) + ")";
        case Expr::Kind::Ident: return e->name;
        case Expr::Kind::Neg: return wrap("-" + format_expr(e->lhs, 1), 0);
        case Expr::Kind::Add:
            return wrap(format_expr(e->lhs, 0) + " + " + format_expr(e->rhs, 1), 0);
        case Expr::Kind::Sub:
            return wrap(format_expr(e->lhs, 0) + " - " + format_expr(e->rhs, 1), 0);
        case Expr::Kind::Mul:
            return wrap(format_expr(e->lhs, 1) + "*" + format_expr(e->rhs, 2), 1);
    }
    throw error("internal: unhandled expression kind");
}

std::string format_command(const Command& c) {
    switch (c.kind) {
        case Command::Kind::Expand: return "expand " + format_expr(c.arg, 0);
        case Command::Kind::Reduce: return "reduce " + format_expr(c.arg, 0);
        case Command::Kind::PermSum:
            return "permsum " + std::to_string(c.n) + " " + std::to_string(c.k);
        case Command::Kind::Check:
            return "check " + format_expr(c.arg, 0) + " = " + format_expr(c.arg2, 0);
    }
    throw error("internal: unhandled command kind");
}

}  // namespace

std::string format(const Program& p) {
    std::ostringstream os;
    if (!p.symbols.empty()) {
        os << "symbols";
        for (const auto& s : p.symbols) os << " " << s;
        os << ";\n";
    }
    if (!p.variables.empty()) {
        os << "vars";
        for (const auto& v : p.variables) os << " " << v;
        os << ";\n";
    }
    for (const auto& b : p.lets) os << "let " << b.name << " = " << format_expr(b.value, 0) << ";\n";
    for (const auto& r : p.relations)
        os << "relation " << format_expr(r.lhs, 0) << " = " << format_expr(r.rhs, 0) << ";\n";
    for (const auto& c : p.commands) os << format_command(c) << ";\n";
    return os.str();
}

Report run(const Program& p) {
    EvalContext ctx = make_context(p);
    RelationSet rs = build_relations(p, ctx);
    Report rep;
    for (const auto& c : p.commands) {
        CommandResult res;
        res.command = format_command(c);
        switch (c.kind) {
            case Command::Kind::Expand:
                res.result = ctx.eval(c.arg).str();
                break;
            case Command::Kind::Reduce:
                res.result = rs.reduce(ctx.eval(c.arg)).str();
                break;
            case Command::Kind::PermSum:
                res.result = perm_sum(c.n, c.k).str();
                break;
            case Command::Kind::Check: {
                NCPoly lhs = rs.reduce(ctx.eval(c.arg));
                NCPoly rhs = rs.reduce(ctx.eval(c.arg2));
                res.check_passed = lhs == rhs;
                res.result = res.check_passed ? "PASS" : "FAIL: " + lhs.str() + " != " + rhs.str();
                break;
            }
        }
        rep.results.push_back(std::move(res));
    }
    return rep;
}

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& r : results) os << r.command << " -> " << r.result << "\n";
    return os.str();
}

}  // namespace specdsl
}  // namespace gammalin
