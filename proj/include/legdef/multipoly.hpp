#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legdef/rational.hpp"

namespace legdef {

// Dense fixed-length exponent vector, one entry per ring variable.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool monomial_divides(const Exps& a, const Exps& b);  // a | b
Exps monomial_lcm(const Exps& a, const Exps& b);
Exps monomial_mul(const Exps& a, const Exps& b);
Exps monomial_div(const Exps& a, const Exps& b);  // requires b | a

struct MonomialOrder {
    enum class Kind { Lex, DegRevLex, Block };
    Kind kind = Kind::DegRevLex;
    // For Block: indices of the elimination block. Any monomial involving a
    // front variable is greater than any monomial without one.
    std::vector<int> front;

    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder degrevlex() { return {Kind::DegRevLex, {}}; }
    static MonomialOrder block(std::vector<int> front_vars) {
        return {Kind::Block, std::move(front_vars)};
    }

    bool less(const Exps& a, const Exps& b) const;
    bool greater(const Exps& a, const Exps& b) const { return less(b, a); }
    bool equal(const Exps& a, const Exps& b) const { return a == b; }
};

// Multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored; every key has size vars.size().
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables) : vars(std::move(variables)) {}

    static MultiPoly zero(const std::vector<std::string>& variables) { return MultiPoly(variables); }
    static MultiPoly constant(const std::vector<std::string>& variables, const Rat& c);
    static MultiPoly variable(const std::vector<std::string>& variables, const std::string& name);
    static MultiPoly monomial(const std::vector<std::string>& variables, const Exps& e, const Rat& c);

    // Shared project-wide grammar: identifiers, `^` powers, optional `*`,
    // rationals as `a/b`, parentheses, unary minus.
    static MultiPoly parse(const std::string& text, const std::vector<std::string>& variables);

    std::vector<std::string> vars;
    std::map<Exps, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int degree() const;      // total degree, -1 for zero
    int order() const;       // lowest total degree of a term, INT_MAX for zero
    int var_index(const std::string& name) const;
    int degree_in(int var) const;
    bool uses_var(int var) const;

    void set(const Exps& e, const Rat& c);
    Rat coeff(const Exps& e) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly& o) const { return vars == o.vars && terms == o.terms; }

    MultiPoly pow(int k) const;
    MultiPoly derivative(const std::string& var) const;
    MultiPoly truncated(int max_total_degree) const;  // keep terms of degree < bound

    // Map this polynomial into a ring with more variables (matched by name).
    MultiPoly lifted(const std::vector<std::string>& new_vars) const;

    // Substitute polynomials for variables; images must share a ring.
    MultiPoly substituted(const std::map<std::string, MultiPoly>& images) const;

    // Evaluate at a rational point; every used variable must be given.
    Rat evaluated(const std::map<std::string, Rat>& point) const;

    // Leading term w.r.t. an order; poly must be nonzero.
    std::pair<Exps, Rat> leading_term(const MonomialOrder& ord) const;

    std::string str() const;  // deterministic: degrevlex-descending terms
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

std::string monomial_str(const std::vector<std::string>& vars, const Exps& e);

}  // namespace legdef
