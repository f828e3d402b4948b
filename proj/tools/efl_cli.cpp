#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "efl/forest.hpp"
#include "efl/grammar.hpp"
#include "efl/ibtree.hpp"
#include "efl/parallel.hpp"
#include "efl/perm.hpp"
#include "efl/verify.hpp"

namespace {

using namespace efl;

// Enumeration-backed routes walk S_{n+1}; past this the CLI refuses rather
// than silently running for hours.
constexpr int kCliEnumCap = 10;

Perm parse_perm(const std::string& text) {
    std::vector<int> word;
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        // "849612537" means one digit per letter
        for (char ch : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("cannot read permutation: " + text);
            word.push_back(ch - '0');
        }
    } else {
        for (const auto& tok : tokens) word.push_back(std::stoi(tok));
    }
    return Perm(std::move(word));
}

Poly star_swap(const Poly& p) {
    return p.substituted({{Var::X, Poly::var(Var::Y)}, {Var::Y, Poly::var(Var::X)}});
}

std::string gamma_json(const GammaExpansion& g) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [rest, block] : g.blocks) {
        if (!first) os << ",";
        os << "{\"rest\":[";
        for (int i = 0; i < kVarCount; ++i) {
            if (i) os << ",";
            os << rest.exp[i];
        }
        os << "],\"d\":" << block.degree << ",\"gamma\":[";
        for (std::size_t j = 0; j < block.gamma.size(); ++j) {
            if (j) os << ",";
            os << "\"" << rat_str(block.gamma[j]) << "\"";
        }
        os << "]}";
        first = false;
    }
    os << "]";
    return os.str();
}

void print_gamma_text(const GammaExpansion& g) {
    for (const auto& [rest, block] : g.blocks) {
        std::cout << rest.str() << " (d=" << block.degree << "):";
        for (const auto& c : block.gamma) std::cout << " " << rat_str(c);
        std::cout << "\n";
    }
}

const std::map<std::string, LabelScheme> kSchemes = {
    {"xy", LabelScheme::XY},         {"abab", LabelScheme::ABAlphaBeta},
    {"abalpha", LabelScheme::ABAlpha}, {"mod1", LabelScheme::Modified1},
    {"mod2", LabelScheme::Modified2}, {"axyz", LabelScheme::AXYZ},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the (alpha,beta)-Eulerian polynomials: "
                 "grammar, enumeration, tree and forest routes, gamma "
                 "expansions, and an identity verification harness"};
    app.require_subcommand(1);

    unsigned threads = 1;
    app.add_option("--threads", threads,
                   "worker threads for enumeration sums (EFL_THREADS overrides)")
        ->capture_default_str();

    // eulerian
    auto* cmd_eu = app.add_subcommand("eulerian", "print A_n(x,y|alpha,beta)");
    int eu_n = 0;
    std::string eu_route = "grammar";
    bool eu_star = false, eu_json = false;
    cmd_eu->add_option("--n", eu_n, "index n")->required()->check(CLI::NonNegativeNumber);
    cmd_eu->add_option("--route", eu_route, "construction route")
        ->check(CLI::IsMember({"grammar", "enum", "tree"}))
        ->capture_default_str();
    cmd_eu->add_flag("--star", eu_star, "swap x and y (A*_n)");
    cmd_eu->add_flag("--json", eu_json, "JSON output");

    // gamma
    auto* cmd_ga = app.add_subcommand("gamma", "print a gamma-coefficient table");
    int ga_n = 0;
    std::string ga_family = "alpha-eulerian";
    bool ga_json = false;
    cmd_ga->add_option("--n", ga_n, "index n")->required()->check(CLI::NonNegativeNumber);
    cmd_ga->add_option("--family", ga_family, "polynomial family")
        ->check(CLI::IsMember({"alpha-eulerian", "derangement"}))
        ->capture_default_str();
    cmd_ga->add_flag("--json", ga_json, "JSON output");

    // stats
    auto* cmd_st = app.add_subcommand("stats", "permutation statistics and cycle form");
    std::string st_perm;
    bool st_json = false;
    cmd_st->add_option("--perm", st_perm, "one-line word, e.g. \"8 4 9 6 1 2 5 3 7\"")
        ->required();
    cmd_st->add_flag("--json", st_json, "JSON output");

    // tree
    auto* cmd_tr = app.add_subcommand("tree", "increasing binary tree of a permutation");
    std::string tr_perm, tr_labeling = "abab";
    bool tr_json = false;
    cmd_tr->add_option("--perm", tr_perm, "one-line word")->required();
    cmd_tr->add_option("--labeling", tr_labeling, "labeling scheme")
        ->check(CLI::IsMember({"abab", "abalpha", "mod1", "mod2", "axyz", "xy"}))
        ->capture_default_str();
    cmd_tr->add_flag("--json", tr_json, "JSON output");

    // forest
    auto* cmd_fo = app.add_subcommand("forest", "supporting forest and its plane form");
    std::string fo_perm;
    bool fo_json = false;
    cmd_fo->add_option("--perm", fo_perm, "one-line word")->required();
    cmd_fo->add_flag("--json", fo_json, "JSON output");

    // verify
    auto* cmd_ve = app.add_subcommand("verify", "run the identity checks");
    int ve_max_n = 7;
    std::string ve_check;
    bool ve_json = false, ve_timings = false;
    cmd_ve->add_option("--max-n", ve_max_n, "largest n per check (each check also has its own cap)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd_ve->add_option("--check", ve_check, "run a single check id, e.g. T24_planeForest");
    cmd_ve->add_flag("--json", ve_json, "JSON report");
    cmd_ve->add_flag("--timings", ve_timings, "include elapsed times (not run-to-run stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    threads = resolve_thread_count(threads);

    try {
        if (cmd_eu->parsed()) {
            Poly a;
            if (eu_route == "grammar") {
                a = eulerian_via_grammar(eu_n);
            } else if (eu_n > kCliEnumCap) {
                std::cerr << "route '" << eu_route << "' enumerates S_" << (eu_n + 1)
                          << "; use --route grammar beyond n=" << kCliEnumCap << "\n";
                return 2;
            } else if (eu_route == "enum") {
                a = eulerian_by_enumeration(eu_n, EulerianForm::MinStatistics, threads);
            } else {
                const Monomial ab = Monomial::var(Var::A) * Monomial::var(Var::B);
                a = sum_weights(eu_n + 1, LabelScheme::ABAlphaBeta, threads).divided_exact(ab);
            }
            if (eu_star) a = star_swap(a);
            std::cout << (eu_json ? a.json() : a.str()) << "\n";
            return 0;
        }

        if (cmd_ga->parsed()) {
            Poly base;
            if (ga_family == "alpha-eulerian") {
                base = eulerian_via_grammar(ga_n).substituted(
                    {{Var::Beta, Poly::var(Var::Alpha)}});
            } else {
                if (ga_n > kCliEnumCap) {
                    std::cerr << "derangement table enumerates S_" << ga_n
                              << "; capped at n=" << kCliEnumCap << "\n";
                    return 2;
                }
                base = derangement_poly(ga_n, threads);
            }
            const GammaExpansion g = gamma_expand(base);
            if (ga_json)
                std::cout << gamma_json(g) << "\n";
            else
                print_gamma_text(g);
            return 0;
        }

        if (cmd_st->parsed()) {
            const Perm p = parse_perm(st_perm);
            const StatBundle s = statistics(p);
            const CyclePerm cp = word_to_cycle(p);
            if (st_json) {
                std::ostringstream os;
                os << "{\"word\":[";
                for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? "," : "") << p.at(i);
                os << "],\"asc\":" << s.asc << ",\"des\":" << s.des
                   << ",\"lrmax\":" << s.lrmax << ",\"rlmax\":" << s.rlmax
                   << ",\"lrmin\":" << s.lrmin << ",\"rlmin\":" << s.rlmin
                   << ",\"peaks\":" << s.peaks << ",\"exc\":" << s.exc
                   << ",\"drop\":" << s.drop << ",\"fix\":" << s.fix
                   << ",\"cyc\":" << s.cyc << ",\"cycles\":[";
                for (std::size_t c = 0; c < cp.cycles().size(); ++c) {
                    if (c) os << ",";
                    os << "[";
                    for (std::size_t i = 0; i < cp.cycles()[c].size(); ++i)
                        os << (i ? "," : "") << cp.cycles()[c][i];
                    os << "]";
                }
                os << "]}";
                std::cout << os.str() << "\n";
            } else {
                std::cout << "asc=" << s.asc << " des=" << s.des << " lrmax=" << s.lrmax
                          << " rlmax=" << s.rlmax << " lrmin=" << s.lrmin
                          << " rlmin=" << s.rlmin << " peaks=" << s.peaks
                          << " exc=" << s.exc << " drop=" << s.drop << " fix=" << s.fix
                          << " cyc=" << s.cyc << "\n"
                          << "cycles=" << cp.str() << "\n";
            }
            return 0;
        }

        if (cmd_tr->parsed()) {
            const Perm p = parse_perm(tr_perm);
            const IncTree t = IncTree::from_perm(p);
            const LabeledTree lt = apply_labeling(t, kSchemes.at(tr_labeling));
            if (tr_json) {
                std::cout << "{\"tree\":\"" << t.str() << "\",\"labeled\":\""
                          << lt.rendered << "\",\"weight\":" << lt.weight.json() << "}\n";
            } else {
                std::cout << "tree=" << t.str() << "\n"
                          << "labeled=" << lt.rendered << "\n"
                          << "weight=" << lt.weight.str() << "\n";
            }
            return 0;
        }

        if (cmd_fo->parsed()) {
            const Perm p = parse_perm(fo_perm);
            const SupportForest f = supporting_forest(IncTree::from_perm(p));
            const PlaneForest pf = canonicalize(f);
            if (fo_json) {
                std::cout << "{\"supporting\":\"" << f.str() << "\",\"plane\":\""
                          << pf.str() << "\"}\n";
            } else {
                std::cout << "supporting=" << f.str() << "\n"
                          << "plane=" << pf.str() << "\n";
            }
            return 0;
        }

        if (cmd_ve->parsed()) {
            VerifyConfig cfg;
            cfg.threads = threads;
            std::vector<CheckReport> reports;
            if (!ve_check.empty()) {
                const auto id = check_from_name(ve_check);
                if (!id) {
                    std::cerr << "unknown check id: " << ve_check << "\n";
                    return 2;
                }
                for (int n = check_min_n(*id);
                     n <= std::min(ve_max_n, check_cap(cfg, *id)); ++n)
                    reports.push_back(run_check(*id, n, cfg));
            } else {
                reports = run_all(ve_max_n, cfg);
            }
            if (ve_json) {
                std::cout << reports_json(reports, ve_timings) << "\n";
            } else {
                for (const auto& r : reports) std::cout << report_line(r, ve_timings) << "\n";
            }
            return all_pass(reports) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
