#ifndef GAMMALIN_SPECDSL_HPP
#define GAMMALIN_SPECDSL_HPP

#include <memory>
#include <string>
#include <vector>

#include "gammalin/ncpoly.hpp"
#include "gammalin/relations.hpp"

namespace gammalin {
namespace specdsl {

struct SourceSpan {
    unsigned line = 1;
    unsigned column = 1;
    size_t begin = 0;
    size_t end = 0;
};

/// Lexical, syntactic or semantic diagnostic anchored in the source text.
struct parse_error : error {
    parse_error(const SourceSpan& s, const std::string& msg)
        : error("line " + std::to_string(s.line) + ", column " + std::to_string(s.column) + ": " + msg),
          span(s) {}
    SourceSpan span;
};

/// Expression tree. Integer powers are desugared into repeated products at
/// parse time, so Mul/Add/Sub/Neg/Ident/Number/Zeta is the whole shape.
struct Expr {
    enum class Kind { Number, Zeta, Ident, Neg, Add, Sub, Mul };
    Kind kind;
    SourceSpan span;
    Rational number;          // Number
    unsigned zeta_order = 0;  // Zeta
    std::string name;         // Ident
    std::shared_ptr<Expr> lhs, rhs;

    bool structurally_equal(const Expr& o) const;
};

using ExprPtr = std::shared_ptr<Expr>;

struct LetBinding {
    std::string name;
    ExprPtr value;  // scalar-valued expression
    SourceSpan span;
};

struct Relation {
    ExprPtr lhs, rhs;
    SourceSpan span;
};

struct Command {
    enum class Kind { Expand, Reduce, PermSum, Check };
    Kind kind;
    SourceSpan span;
    ExprPtr arg;        // Expand / Reduce / Check lhs
    ExprPtr arg2;       // Check rhs
    unsigned n = 0, k = 0;  // PermSum
};

/// Validated script: every identifier declared, every relation oriented
/// and terminating under the declaration-order term order.
struct Program {
    std::vector<std::string> symbols;  // declaration order = term order
    std::vector<std::string> variables;
    std::vector<LetBinding> lets;
    std::vector<Relation> relations;
    std::vector<Command> commands;

    bool structurally_equal(const Program& o) const;
};

/// Parses and validates a script. Grammar:
///   program := stmt* ; stmt := ("symbols" ident+ | "vars" ident+
///     | "let" ident "=" expr | "relation" expr "=" expr | command) ";"
///   command := "expand" expr | "reduce" expr | "permsum" int int
///     | "check" expr "=" expr
/// Uppercase identifiers are noncommutative symbols, lowercase commutative
/// variables or let-bound scalars; "#" starts a line comment.
Program parse(const std::string& text);

/// Canonical pretty-print; parse(format(p)) structurally equals p.
std::string format(const Program& p);

struct CommandResult {
    std::string command;  // formatted command text
    std::string result;   // rendered polynomial or check verdict
    bool check_passed = true;
};

struct Report {
    std::vector<CommandResult> results;
    std::string text() const;
};

/// Executes the commands in order against the algebra core.
Report run(const Program& p);

}  // namespace specdsl
}  // namespace gammalin

#endif
