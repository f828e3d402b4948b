#include "efl/grammar.hpp"

namespace efl {

const GrammarRules& eulerian_grammar() {
    static const GrammarRules g = [] {
        const Poly x = Poly::var(Var::X);
        const Poly y = Poly::var(Var::Y);
        GrammarRules r;
        r.rules[Var::A] = Poly::var(Var::Alpha) * Poly::var(Var::A) * y;
        r.rules[Var::B] = Poly::var(Var::Beta) * Poly::var(Var::B) * x;
        r.rules[Var::X] = x * y;
        r.rules[Var::Y] = x * y;
        return r;
    }();
    return g;
}

Poly formal_derivative(const GrammarRules& g, const Poly& p) {
    Poly result;
    for (const auto& [v, rhs] : g.rules) {
        Poly d = p.derivative(v);
        if (!d.is_zero()) result += rhs * d;
    }
    return result;
}

Poly iterate(const GrammarRules& g, const Poly& seed, unsigned n) {
    Poly p = seed;
    for (unsigned i = 0; i < n; ++i) p = formal_derivative(g, p);
    return p;
}

Poly eulerian_via_grammar(unsigned n) {
    const Poly ab = Poly::var(Var::A) * Poly::var(Var::B);
    const Monomial ab_mono = Monomial::var(Var::A) * Monomial::var(Var::B);
    return iterate(eulerian_grammar(), ab, n).divided_exact(ab_mono);
}

}  // namespace efl
