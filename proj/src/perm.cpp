#include "efl/perm.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "efl/parallel.hpp"

namespace efl {

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("word is not a permutation of [n]");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
}

std::string Perm::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) os << " ";
        os << word_[i];
    }
    return os.str();
}

StatBundle statistics(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    StatBundle s;
    if (n == 0) return s;

    int lo = w[0], hi = w[0];
    s.lrmax = s.lrmin = 1;
    for (int i = 1; i < n; ++i) {
        if (w[i] > w[i - 1]) ++s.asc; else ++s.des;
        if (w[i] > hi) { hi = w[i]; ++s.lrmax; }
        if (w[i] < lo) { lo = w[i]; ++s.lrmin; }
    }
    lo = hi = w[n - 1];
    s.rlmax = s.rlmin = 1;
    for (int i = n - 2; i >= 0; --i) {
        if (w[i] > hi) { hi = w[i]; ++s.rlmax; }
        if (w[i] < lo) { lo = w[i]; ++s.rlmin; }
    }
    for (int i = 1; i + 1 < n; ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) ++s.peaks;

    std::vector<bool> visited(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (w[i - 1] > i) ++s.exc;
        else if (w[i - 1] < i) ++s.drop;
        else ++s.fix;
        if (!visited[i]) {
            ++s.cyc;
            for (int j = i; !visited[j]; j = w[j - 1]) visited[j] = true;
        }
    }
    return s;
}

StatBundle statistics(const Perm& p) { return statistics(p.word()); }

Perm CyclePerm::to_function_word() const {
    int n = 0;
    for (const auto& c : cycles_)
        for (int v : c) n = std::max(n, v);
    std::vector<int> w(n, 0);
    for (const auto& c : cycles_) {
        for (std::size_t i = 0; i < c.size(); ++i)
            w[c[i] - 1] = c[(i + 1) % c.size()];
    }
    return Perm(std::move(w));
}

std::string CyclePerm::str() const {
    std::ostringstream os;
    for (const auto& c : cycles_) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << " ";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

CyclePerm word_to_cycle(const Perm& p) {
    const auto& w = p.word();
    const int n = p.size();
    std::vector<std::vector<int>> cycles;
    int lo = n + 1;
    std::size_t start = 0;
    for (int i = 0; i < n; ++i) {
        if (w[i] < lo) {
            lo = w[i];
            cycles.emplace_back(w.begin() + start, w.begin() + i + 1);
            start = i + 1;
        }
    }
    return CyclePerm(std::move(cycles));
}

std::uint64_t stream_count(int n, PermFamily family) {
    std::uint64_t count = 0;
    for_each_in_family(n, family, [&](const std::vector<int>&) { ++count; });
    return count;
}

namespace {

// Exponent tallies keep the hot loops in integer arithmetic; the polynomial
// is assembled once per distinct signature.
using Tally = std::map<std::array<std::uint16_t, 4>, std::uint64_t>;

void merge_into(Tally& dst, const Tally& src) {
    for (const auto& [k, v] : src) dst[k] += v;
}

Tally sum_blocks(int m, unsigned threads, const std::function<void(const std::vector<int>&, Tally&)>& tally) {
    if (m == 0) {
        Tally t;
        std::vector<int> empty;
        tally(empty, t);
        return t;
    }
    std::vector<Tally> per_job(m);
    parallel_for_jobs(m, threads, [&](std::size_t job) {
        for_each_permutation_prefixed(m, static_cast<int>(job) + 1,
                                      [&](const std::vector<int>& w) { tally(w, per_job[job]); });
    });
    Tally total;
    for (const auto& t : per_job) merge_into(total, t);
    return total;
}

}  // namespace

Poly eulerian_by_enumeration(int n, EulerianForm form, unsigned threads) {
    const int m = n + 1;
    Tally total = sum_blocks(m, threads, [form](const std::vector<int>& w, Tally& t) {
        const StatBundle s = statistics(w);
        std::array<std::uint16_t, 4> key{};
        if (form == EulerianForm::MaxStatistics)
            key = {static_cast<std::uint16_t>(s.asc), static_cast<std::uint16_t>(s.des),
                   static_cast<std::uint16_t>(s.rlmax - 1), static_cast<std::uint16_t>(s.lrmax - 1)};
        else
            key = {static_cast<std::uint16_t>(s.des), static_cast<std::uint16_t>(s.asc),
                   static_cast<std::uint16_t>(s.rlmin - 1), static_cast<std::uint16_t>(s.lrmin - 1)};
        ++t[key];
    });

    Poly result;
    for (const auto& [key, count] : total) {
        Monomial mono;
        mono.exp[static_cast<int>(Var::X)] = key[0];
        mono.exp[static_cast<int>(Var::Y)] = key[1];
        mono.exp[static_cast<int>(Var::Alpha)] = key[2];
        mono.exp[static_cast<int>(Var::Beta)] = key[3];
        result.add_term(mono, Rat(Int(count)));
    }
    return result;
}

Poly derangement_poly(int n, unsigned threads) {
    Tally total = sum_blocks(n, threads, [](const std::vector<int>& w, Tally& t) {
        if (!is_derangement(w)) return;
        const StatBundle s = statistics(w);
        ++t[{static_cast<std::uint16_t>(s.exc), static_cast<std::uint16_t>(s.drop),
             static_cast<std::uint16_t>(s.cyc), 0}];
    });

    Poly result;
    for (const auto& [key, count] : total) {
        Monomial mono;
        mono.exp[static_cast<int>(Var::X)] = key[0];
        mono.exp[static_cast<int>(Var::Y)] = key[1];
        mono.exp[static_cast<int>(Var::Q)] = key[2];
        result.add_term(mono, Rat(Int(count)));
    }
    return result;
}

}  // namespace efl
