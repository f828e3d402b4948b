#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "efl/poly.hpp"

namespace efl {

// A permutation of [n] in one-line notation, 1-based values.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> word);
    static Perm identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    // Value at 1-based position i.
    int at(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    std::string str() const;

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> word_;
};

struct StatBundle {
    int asc = 0, des = 0;
    int lrmax = 0, rlmax = 0, lrmin = 0, rlmin = 0;
    int peaks = 0;  // interior peaks: 2 <= i <= n-1 with w[i-1] < w[i] > w[i+1]
    // Cycle statistics of the word read as the function i -> w[i].
    int exc = 0, drop = 0, fix = 0, cyc = 0;
};

StatBundle statistics(const Perm& p);
StatBundle statistics(const std::vector<int>& word);

// Canonical cycle form: minimum of each cycle last, cycles by increasing minima.
class CyclePerm {
public:
    explicit CyclePerm(std::vector<std::vector<int>> cycles)
        : cycles_(std::move(cycles)) {}

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    int cycle_count() const { return static_cast<int>(cycles_.size()); }

    // The permutation i -> pi(i) the cycles denote, as a one-line word.
    Perm to_function_word() const;

    std::string str() const;  // "(8 4 9 6 1)(2)(5 3)(7)"

    friend bool operator==(const CyclePerm&, const CyclePerm&) = default;

private:
    std::vector<std::vector<int>> cycles_;
};

// Cut the one-line word immediately after each right-to-left minimum; every
// segment is a cycle with its minimum last, and the cycles come out sorted
// by increasing minima.
CyclePerm word_to_cycle(const Perm& p);

enum class PermFamily { All, Derangements };

// Streams the permutations of [n] in lexicographic order. The visitor
// receives the word as const std::vector<int>&.
template <typename V>
void for_each_permutation(int n, V&& visit) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(const_cast<const std::vector<int>&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// The lexicographic block with fixed first value (n >= 1).
template <typename V>
void for_each_permutation_prefixed(int n, int first, V&& visit) {
    std::vector<int> w(n);
    w[0] = first;
    int k = 1;
    for (int v = 1; v <= n; ++v)
        if (v != first) w[k++] = v;
    do {
        visit(const_cast<const std::vector<int>&>(w));
    } while (std::next_permutation(w.begin() + 1, w.end()));
}

inline bool is_derangement(const std::vector<int>& w) {
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] == i + 1) return false;
    return true;
}

template <typename V>
void for_each_in_family(int n, PermFamily family, V&& visit) {
    for_each_permutation(n, [&](const std::vector<int>& w) {
        if (family == PermFamily::Derangements && !is_derangement(w)) return;
        visit(w);
    });
}

std::uint64_t stream_count(int n, PermFamily family);

// The two statistic attributions that build A_n(x,y|alpha,beta) over S_{n+1}:
//   MaxStatistics: x^asc y^des alpha^(rlmax-1) beta^(lrmax-1)
//   MinStatistics: x^des y^asc alpha^(rlmin-1) beta^(lrmin-1)
// Both sum to the same polynomial.
enum class EulerianForm { MaxStatistics, MinStatistics };

Poly eulerian_by_enumeration(int n, EulerianForm form, unsigned threads = 1);

// d_n(x,y,q) = sum over derangements of x^exc y^drop q^cyc.
Poly derangement_poly(int n, unsigned threads = 1);

}  // namespace efl
