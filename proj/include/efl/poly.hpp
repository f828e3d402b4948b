#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "efl/rational.hpp"

namespace efl {

// The variable alphabet is closed: eight symbols, in this fixed order.
// Serialization (text and JSON exponent vectors) always uses this order.
enum class Var : std::uint8_t { X = 0, Y, A, B, Alpha, Beta, Q, Z };

inline constexpr int kVarCount = 8;

inline constexpr std::array<const char*, kVarCount> kVarNames = {
    "x", "y", "a", "b", "alpha", "beta", "q", "z"};

inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::X, Var::Y, Var::A, Var::B, Var::Alpha, Var::Beta, Var::Q, Var::Z};

struct Monomial {
    std::array<std::uint16_t, kVarCount> exp{};

    static Monomial var(Var v, unsigned k = 1) {
        Monomial m;
        m.exp[static_cast<int>(v)] = static_cast<std::uint16_t>(k);
        return m;
    }

    std::uint16_t operator[](Var v) const { return exp[static_cast<int>(v)]; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto e : exp) d += e;
        return d;
    }

    unsigned degree_xy() const { return exp[0] + exp[1]; }

    bool is_one() const { return total_degree() == 0; }

    bool divisible_by(const Monomial& m) const {
        for (int i = 0; i < kVarCount; ++i)
            if (exp[i] < m.exp[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i)
            r.exp[i] = static_cast<std::uint16_t>(exp[i] + m.exp[i]);
        return r;
    }

    // Caller must ensure divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i)
            r.exp[i] = static_cast<std::uint16_t>(exp[i] - m.exp[i]);
        return r;
    }

    // Same monomial with the x and y exponents cleared.
    Monomial without_xy() const {
        Monomial r = *this;
        r.exp[0] = r.exp[1] = 0;
        return r;
    }

    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: lexicographic (descending) in the alphabet order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exp > b.exp;
    }
};

struct NotDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSymmetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHomogeneousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial over Rat in the fixed alphabet.
// Invariant: no stored coefficient is zero; term map is the identity of the value.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    Poly() = default;
    explicit Poly(const Rat& c) { add_term(Monomial{}, c); }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly var(Var v, unsigned k = 1) { return monomial(Monomial::var(v, k)); }
    static Poly monomial(const Monomial& m, const Rat& c = 1) {
        Poly p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly scaled(const Rat& c) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Poly pow(unsigned k) const;
    Poly derivative(Var v) const;

    // Simultaneous substitution; unbound variables unchanged.
    Poly substituted(const std::map<Var, Poly>& bindings) const;

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Exact quotient by a monomial; throws NotDivisibleError otherwise.
    Poly divided_exact(const Monomial& m) const;

    Rat value_at_ones() const {
        Rat s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    bool is_homogeneous_xy(unsigned d) const {
        for (const auto& [m, c] : terms_)
            if (m.degree_xy() != d) return false;
        return true;
    }

    unsigned max_degree(Var v) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[v]);
        return d;
    }

    // First monomial (canonical order) where the two polynomials differ.
    static bool first_difference(const Poly& a, const Poly& b, Monomial& out);

    std::string str() const;
    std::string json() const;

private:
    TermMap terms_;
};

// Expansion of each x,y-homogeneous symmetric slice in the basis
// (xy)^j (x+y)^(d-2j), keyed by the x,y-free part of the monomials.
struct GammaExpansion {
    struct Block {
        unsigned degree = 0;             // common x,y-degree d of the slice
        std::vector<Rat> gamma;          // gamma_0 .. gamma_{floor(d/2)}
        friend bool operator==(const Block&, const Block&) = default;
    };
    std::map<Monomial, Block, MonomialOrder> blocks;

    Poly reconstruct() const;
    bool nonnegative() const;
    friend bool operator==(const GammaExpansion&, const GammaExpansion&) = default;
};

GammaExpansion gamma_expand(const Poly& p);

// The basis element rest * (xy)^j (x+y)^(d-2j).
Poly gamma_basis_term(const Monomial& rest, unsigned d, unsigned j);

}  // namespace efl
