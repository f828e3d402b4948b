#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efl/poly.hpp"

namespace efl {

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One registered check per identity; every check compares two independently
// computed sides with exact equality.
enum class CheckId {
    T11_grammar,
    T22_treeSum,
    T23_supportForest,
    T24_planeForest,
    T25_gammaAlpha,
    T26_gammaDerangement,
    T31_stembridgeAB,
    T32_leftForest,
    T33_rightForest,
    T34_signedHalf,
    T34_refined,
    DEF_equivalence,
    SYM_reversal,
};

const std::vector<CheckId>& all_check_ids();
const char* check_name(CheckId id);
std::optional<CheckId> check_from_name(const std::string& name);

struct CheckReport {
    CheckId id;
    int n = 0;
    bool pass = false;
    Poly lhs, rhs;
    std::chrono::milliseconds elapsed{0};
    std::optional<Monomial> witness;  // first differing monomial on failure
};

struct VerifyConfig {
    unsigned threads = 1;
    // Per-check n caps; enumeration scale differs per route.
    std::map<CheckId, int> caps;

    VerifyConfig();
};

// Smallest meaningful n for a check (the two tree-sum identities need a
// nonempty tree on both sides).
int check_min_n(CheckId id);
int check_cap(const VerifyConfig& cfg, CheckId id);

// Runs one check at one n. Throws BudgetExceededError past the cap.
CheckReport run_check(CheckId id, int n, const VerifyConfig& cfg = VerifyConfig());

// Every check at every feasible n <= max_n, ordered by check then n.
std::vector<CheckReport> run_all(int max_n, const VerifyConfig& cfg = VerifyConfig());

bool all_pass(const std::vector<CheckReport>& reports);

// [{"id":"T24_planeForest","n":6,"status":"pass"},...]; elapsed_ms is
// emitted only on request so the default output is run-to-run stable.
std::string reports_json(const std::vector<CheckReport>& reports, bool timings);

std::string report_line(const CheckReport& r, bool timings);

}  // namespace efl
