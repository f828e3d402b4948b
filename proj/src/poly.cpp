#include "efl/poly.hpp"

#include <sstream>

namespace efl {

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kVarCount; ++i) {
        if (exp[i] == 0) continue;
        if (!first) os << "*";
        os << kVarNames[i];
        if (exp[i] > 1) os << "^" << exp[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

Poly Poly::pow(unsigned k) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

Poly Poly::derivative(Var v) const {
    const int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.exp[vi] == 0) continue;
        Monomial d = m;
        d.exp[vi] -= 1;
        r.add_term(d, c * m.exp[vi]);
    }
    return r;
}

Poly Poly::substituted(const std::map<Var, Poly>& bindings) const {
    // Per-variable power cache; exponents stay small.
    std::array<std::vector<Poly>, kVarCount> powers;
    auto power_of = [&](int vi, unsigned e) -> const Poly& {
        auto& cache = powers[vi];
        if (cache.empty()) cache.push_back(Poly(Rat(1)));
        while (cache.size() <= e) {
            const Poly& base = bindings.at(static_cast<Var>(vi));
            cache.push_back(cache.back() * base);
        }
        return cache[e];
    };

    Poly result;
    for (const auto& [m, c] : terms_) {
        Monomial untouched;
        Poly factor(c);
        for (int vi = 0; vi < kVarCount; ++vi) {
            if (m.exp[vi] == 0) continue;
            if (bindings.count(static_cast<Var>(vi)))
                factor = factor * power_of(vi, m.exp[vi]);
            else
                untouched.exp[vi] = m.exp[vi];
        }
        result += factor * Poly::monomial(untouched);
    }
    return result;
}

Poly Poly::divided_exact(const Monomial& m) const {
    Poly r;
    for (const auto& [t, c] : terms_) {
        if (!t.divisible_by(m))
            throw NotDivisibleError("term " + t.str() + " is not divisible by " + m.str());
        r.terms_.emplace(t / m, c);
    }
    return r;
}

bool Poly::first_difference(const Poly& a, const Poly& b, Monomial& out) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) {
                out = ia->first;
                return true;
            }
            ++ia, ++ib;
        } else if (MonomialOrder{}(ia->first, ib->first)) {
            out = ia->first;
            return true;
        } else {
            out = ib->first;
            return true;
        }
    }
    if (ia != a.terms_.end()) { out = ia->first; return true; }
    if (ib != b.terms_.end()) { out = ib->first; return true; }
    return false;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rat a = neg ? Rat(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (m.is_one())
            os << rat_str(a);
        else if (a == 1)
            os << m.str();
        else
            os << rat_str(a) << "*" << m.str();
        first = false;
    }
    return os.str();
}

std::string Poly::json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << ",";
        os << "{\"coeff\":{\"num\":\"" << c.get_num().get_str() << "\",\"den\":\""
           << c.get_den().get_str() << "\"},\"exp\":[";
        for (int i = 0; i < kVarCount; ++i) {
            if (i) os << ",";
            os << m.exp[i];
        }
        os << "]}";
        first = false;
    }
    os << "]}";
    return os.str();
}

Poly gamma_basis_term(const Monomial& rest, unsigned d, unsigned j) {
    Poly r;
    const unsigned s = d - 2 * j;
    for (unsigned t = 0; t <= s; ++t) {
        Monomial m = rest;
        m.exp[0] = static_cast<std::uint16_t>(j + t);
        m.exp[1] = static_cast<std::uint16_t>(d - j - t);
        r.add_term(m, Rat(binomial(s, t)));
    }
    return r;
}

GammaExpansion gamma_expand(const Poly& p) {
    // Slice the polynomial by its x,y-free part.
    struct Slice {
        // (x-exponent, y-exponent) -> coefficient
        std::map<std::pair<unsigned, unsigned>, Rat> coeffs;
    };
    std::map<Monomial, Slice, MonomialOrder> slices;
    for (const auto& [m, c] : p.terms()) {
        slices[m.without_xy()].coeffs[{m[Var::X], m[Var::Y]}] = c;
    }

    GammaExpansion out;
    for (auto& [rest, slice] : slices) {
        unsigned d = slice.coeffs.begin()->first.first + slice.coeffs.begin()->first.second;
        for (const auto& [e, c] : slice.coeffs) {
            if (e.first + e.second != d)
                throw NotHomogeneousError("mixed x,y-degrees in block " + rest.str());
        }
        for (const auto& [e, c] : slice.coeffs) {
            auto it = slice.coeffs.find({e.second, e.first});
            if (it == slice.coeffs.end() || it->second != c)
                throw NotSymmetricError("block " + rest.str() +
                                        " is not symmetric under x<->y");
        }

        GammaExpansion::Block block;
        block.degree = d;
        auto remainder = slice.coeffs;
        auto coeff_at = [&](unsigned i, unsigned j) -> Rat {
            auto it = remainder.find({i, j});
            return it == remainder.end() ? Rat(0) : it->second;
        };
        for (unsigned j = 0; j <= d / 2; ++j) {
            const Rat g = coeff_at(d - j, j);
            block.gamma.push_back(g);
            if (g == 0) continue;
            const unsigned s = d - 2 * j;
            for (unsigned t = 0; t <= s; ++t) {
                auto key = std::make_pair(j + t, d - j - t);
                Rat& slot = remainder[key];
                slot -= g * Rat(binomial(s, t));
                if (slot == 0) remainder.erase(key);
            }
        }
        if (!remainder.empty())
            throw NotSymmetricError("expansion of block " + rest.str() +
                                    " left a nonzero remainder");
        out.blocks.emplace(rest, std::move(block));
    }
    return out;
}

Poly GammaExpansion::reconstruct() const {
    Poly r;
    for (const auto& [rest, block] : blocks)
        for (unsigned j = 0; j < block.gamma.size(); ++j)
            r += gamma_basis_term(rest, block.degree, j).scaled(block.gamma[j]);
    return r;
}

bool GammaExpansion::nonnegative() const {
    for (const auto& [rest, block] : blocks)
        for (const Rat& g : block.gamma)
            if (g < 0) return false;
    return true;
}

}  // namespace efl
