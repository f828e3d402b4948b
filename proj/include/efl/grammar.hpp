#pragma once

#include <map>

#include "efl/poly.hpp"

namespace efl {

// Substitution rules variable -> polynomial. Variables without a rule are
// treated as constants of the derivative (rule 0).
struct GrammarRules {
    std::map<Var, Poly> rules;
};

// The grammar generating the Eulerian polynomials:
//   a -> alpha*a*y,  b -> beta*b*x,  x -> x*y,  y -> x*y
const GrammarRules& eulerian_grammar();

// D(p) = sum_v rules(v) * dp/dv. Linear, satisfies the product rule.
Poly formal_derivative(const GrammarRules& g, const Poly& p);

Poly iterate(const GrammarRules& g, const Poly& seed, unsigned n);

// D^n(ab) / (ab) = A_n(x,y|alpha,beta). The quotient is always exact;
// NotDivisibleError here means the engine is broken.
Poly eulerian_via_grammar(unsigned n);

}  // namespace efl
