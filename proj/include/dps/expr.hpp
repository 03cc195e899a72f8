#pragma once

#include "dps/engine.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dps {

struct SyntaxError : std::runtime_error {
    int line, column;
    SyntaxError(const std::string& msg, int line, int column);
};

// Parse tree. Parentheses are not kept as nodes; nesting is.
struct Expr {
    enum class Kind { One, Cusp, Seg, Name, Product, Rtimes };
    Kind kind = Kind::One;
    SegKind seg = SegKind::Delta;  // Seg only
    HalfInt lo, hi;                // Cusp uses lo
    std::string name;              // symbol for Cusp / Seg / Name
    std::vector<Expr> children;    // Product: >= 2 factors; Rtimes: {gl, g}
    int line = 1, column = 1;

    bool operator==(const Expr& o) const;
};

// Grammar:
//   expr    := rtimes EOF
//   rtimes  := product [ '|x|' rtimes ]
//   product := primary { 'x' primary }
//   primary := '1' | 'nu^' q name | ('d'|'z') '(' '[' q ',' q ';' name ']' ')' | name | '(' rtimes ')'
// q is an integer or p/2; a name may end in '~' (contragredient).
Expr parse_expr(const std::string& text);

std::string render(const Expr& e);

// Symbol table used when lowering: GL symbols by name (without '~') and the
// cuspidal G symbols.
struct SymbolTable {
    std::vector<CuspidalGL> gl;
    std::vector<std::string> g;
};

// GL-valued expression (no '|x|')
GLWord lower_gl(const Expr& e, const SymbolTable& t);
// G-valued expression: a product ending in '|x|' and a cuspidal G symbol
GWord lower_g(const Expr& e, const SymbolTable& t);
bool is_g_valued(const Expr& e);

}  // namespace dps
