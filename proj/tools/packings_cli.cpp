// Command-line front end: every counting path of the library behind one
// binary, with machine-readable output and a cross-validation umbrella.

#include "packings/experiments.hpp"
#include "packings/hyperforest.hpp"
#include "packings/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace packings;

namespace {

ScanBudget scan_budget_from_env() {
    ScanBudget b;
    if (const char* v = std::getenv("PACKINGS_SCAN_BUDGET")) b.tuples = std::strtoull(v, nullptr, 10);
    return b;
}

GenericityOptions generic_options_from_env() {
    GenericityOptions o;
    if (const char* v = std::getenv("PACKINGS_GENERIC_BUDGET")) o.budget = std::strtoull(v, nullptr, 10);
    return o;
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

SubsetFamily family_from_flags(const std::string& group, const std::string& sets) {
    return SubsetFamily(FiniteGroup::parse(group), parse_subsets(sets));
}

json witness_to_json(const GenericityWitness& w) {
    json steps = json::array();
    for (auto [set_idx, elem] : w.steps) steps.push_back({{"set", set_idx + 1}, {"element", elem}});
    return steps;
}

// (t0 - t1 s1 + t2 s1^2 ...) si + ..., matching the grouped layout used in
// the x-expansion of U.
std::string format_u_coefficient(const SigmaPoly& un) {
    SigmaPoly neg = -un;
    std::map<int, std::map<int, Int>> grouped;  // i -> j -> coeff of s1^j si
    for (const auto& [m, c] : neg.terms()) {
        int j = 0;
        int i = 0;
        for (int idx : m) {
            if (idx == 1)
                ++j;
            else
                i = idx;
        }
        grouped[i][j] = c;
    }
    std::string out;
    bool first_i = true;
    for (const auto& [i, poly] : grouped) {
        std::string p;
        bool first_j = true;
        bool multiple = poly.size() > 1;
        for (const auto& [j, c] : poly) {
            Int a = c;
            if (first_j) {
                if (a < 0) {
                    p += "-";
                    a = -a;
                }
            } else {
                p += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first_j = false;
            if (a != 1 || j == 0) p += a.str();
            if (j >= 1) {
                if (a != 1) p += "*";
                p += "s1";
                if (j > 1) p += "^" + std::to_string(j);
            }
        }
        if (!first_i) out += " + ";
        first_i = false;
        if (multiple)
            out += "(" + p + ")s" + std::to_string(i);
        else if (poly.begin()->second != 1)
            out += p + "s" + std::to_string(i);
        else
            out += "s" + std::to_string(i);
    }
    return out;
}

int run_triangle(int n) {
    Triangle t(n);
    for (int i = n + 1; i <= 2 * n; ++i) {
        const auto& row = t.row(i);
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) std::cout << " ";
            std::cout << row[j];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_seq(const std::string& kind, int max_n) {
    std::vector<Int> vals;
    if (kind == "s")
        vals = s_sequence(max_n);
    else if (kind == "S")
        vals = S_sequence(max_n);
    else
        throw CLI::ValidationError("seq", "kind must be s or S");
    for (const Int& v : vals) std::cout << v << "\n";
    return 0;
}

int run_useries(int order, const std::string& format) {
    USeries u(order);
    if (format == "json") {
        json out;
        out["order"] = order;
        json coeffs = json::array();
        for (int n = 0; n <= order; ++n) coeffs.push_back(u.coeff(n).str());
        out["coefficients"] = coeffs;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "U = 1";
    for (int n = 1; n <= order; ++n) {
        std::cout << "\n  - (" << format_u_coefficient(u.coeff(n)) << ") x^" << n;
    }
    std::cout << "\n";
    return 0;
}

int run_count(const std::string& group, const std::string& sets, const std::string& cards_csv, long long n_flag,
              bool assume_generic, const std::string& format) {
    Int N;
    std::vector<int> cards;
    if (!cards_csv.empty()) {
        if (n_flag <= 0) throw CLI::ValidationError("count", "--cards needs --N");
        N = n_flag;
        cards = parse_csv_ints(cards_csv);
    } else if (!group.empty()) {
        SubsetFamily fam = family_from_flags(group, sets);
        if (!assume_generic) {
            GenericityResult gen = is_generic(fam, generic_options_from_env());
            if (!gen.generic) {
                json out;
                out["error"] = "family is not generic; the universal count does not apply";
                out["witness"] = witness_to_json(*gen.witness);
                std::cerr << out.dump(2) << "\n";
                return 1;
            }
        }
        N = fam.group().order();
        cards = fam.cardinalities();
    } else {
        throw CLI::ValidationError("count", "need either --N/--cards or --group/--sets");
    }
    Int alpha = packing_count(N, cards);
    if (alpha < 0)
        std::cerr << "warning: negative count; the family cannot be generic at this group order\n";
    if (format == "json") {
        json out;
        out["alpha"] = alpha.str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << alpha << "\n";
    }
    return 0;
}

int run_brute(const std::string& group, const std::string& sets, const std::string& method) {
    SubsetFamily fam = family_from_flags(group, sets);
    Int alpha;
    if (method == "scan")
        alpha = count_packings_bruteforce(fam, scan_budget_from_env());
    else if (method == "boolean-moebius")
        alpha = alpha_via_boolean_moebius(fam, scan_budget_from_env());
    else
        throw CLI::ValidationError("brute", "method must be scan or boolean-moebius");
    json out;
    out["alpha"] = alpha.str();
    out["method"] = method;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_cover(const std::string& group, const std::string& sets, const std::string& method) {
    SubsetFamily fam = family_from_flags(group, sets);
    json out;
    if (method == "scan") {
        out["coverings"] = count_coverings_bruteforce(fam, scan_budget_from_env()).str();
    } else if (method == "complement-formula") {
        // the given sets are the generic family; counts coverings by their complements
        out["coverings"] = complement_covering_count(fam, generic_options_from_env()).str();
    } else {
        throw CLI::ValidationError("cover", "method must be scan or complement-formula");
    }
    out["method"] = method;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_generic_check(const std::string& group, const std::string& sets) {
    SubsetFamily fam = family_from_flags(group, sets);
    GenericityResult gen = is_generic(fam, generic_options_from_env());
    json out;
    out["generic"] = gen.generic;
    if (!gen.generic) out["witness"] = witness_to_json(*gen.witness);
    std::cout << out.dump(2) << "\n";
    return gen.generic ? 0 : 1;
}

json edges_to_json(const Hyperforest& f) {
    json edges = json::array();
    for (const auto& e : f.edges()) {
        json je = json::array();
        for (int v : e) je.push_back(v + 1);
        edges.push_back(je);
    }
    return edges;
}

int run_hf_enum(int n, const std::string& format) {
    auto forests = enumerate_hyperforests(n);
    if (format == "json") {
        json out;
        out["n"] = n;
        out["count"] = forests.size();
        json list = json::array();
        for (const auto& f : forests)
            list.push_back({{"edges", edges_to_json(f)},
                            {"mu", moebius_closed_form(f).str()},
                            {"components", f.component_count()}});
        out["forests"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& f : forests) {
            if (f.edge_count() == 0) {
                std::cout << "(trivial)";
            } else {
                for (size_t e = 0; e < f.edges().size(); ++e) {
                    if (e) std::cout << ";";
                    const auto& edge = f.edges()[e];
                    for (size_t v = 0; v < edge.size(); ++v) {
                        if (v) std::cout << ",";
                        std::cout << edge[v] + 1;
                    }
                }
            }
            std::cout << "  mu=" << moebius_closed_form(f) << "\n";
        }
        std::cout << "total " << forests.size() << "\n";
    }
    return 0;
}

int run_hf_moebius(const std::string& edges_text, int n_flag, bool recursive) {
    std::vector<Subset> raw = parse_subsets(edges_text);
    int n = n_flag;
    std::vector<std::vector<int>> edges;
    for (const auto& e : raw) {
        std::vector<int> shifted;
        for (int v : e) {
            if (v < 1) throw CLI::ValidationError("hf moebius", "vertex labels are 1-based");
            shifted.push_back(v - 1);
            n = std::max(n, v);
        }
        edges.push_back(std::move(shifted));
    }
    Hyperforest f(n, std::move(edges));
    json out;
    out["n"] = n;
    out["mu"] = moebius_closed_form(f).str();
    if (recursive) out["mu_recursive"] = moebius_recursive(f).str();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_hf_alpha(long long N, const std::string& cards_csv) {
    std::vector<int> cards = parse_csv_ints(cards_csv);
    json out;
    out["alpha"] = alpha_via_hyperforest_sum(Int(N), cards).str();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int report_equation_check(const std::string& name, const EquationCheck& chk) {
    if (chk.ok) {
        std::cout << "PASS " << name << " through x^" << chk.order << "\n";
        return 0;
    }
    const auto& mm = *chk.mismatch;
    std::cout << "FAIL " << name << " at x^" << mm.order << " monomial ";
    for (int i : mm.monomial) std::cout << "s" << i;
    std::cout << ": lhs=" << mm.lhs << " rhs=" << mm.rhs << "\n";
    return 1;
}

int run_exp_mod_p(int p, int max_n) {
    json out;
    out["p"] = p;
    auto residues = s_mod_p(p, max_n);
    out["residues"] = residues;
    PeriodInfo info = find_period_mod_p(p);
    out["period"] = {{"found", info.found}, {"preperiod", info.preperiod}, {"period", info.period}};
    if (p - 1 <= static_cast<int>(modular_alpha_constants().size())) {
        ModularAlphaReport rep = modular_alpha_check(p);
        json entries = json::array();
        for (const auto& e : rep.entries)
            entries.push_back({{"m", e.m}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"agree", e.agree}});
        out["alpha_stabilization"] = {{"all_agree", rep.all_agree}, {"entries", entries}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_exp_asympt(const std::string& at_csv, int n_max, int precision, bool with_epsilon) {
    std::vector<int> ns = parse_csv_ints(at_csv);
    if (ns.empty()) {
        for (int n : {50, 100, 200, 400})
            if (n <= n_max) ns.push_back(n);
        if (ns.empty()) ns.push_back(n_max);
    }
    AsymptoticReport rep = asymptotic_report(ns, precision);
    json out;
    out["precision_bits"] = rep.precision_bits;
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"r", r.r},
                        {"r_minus_1", r.dev0},
                        {"r_minus_first_order", r.dev1},
                        {"argmax_i", r.argmax_i},
                        {"argmax_ratio", r.argmax_ratio},
                        {"peak_ratio", r.peak_ratio}});
    out["rows"] = rows;
    if (with_epsilon) {
        json eps = json::array();
        for (const auto& r : epsilon_report())
            eps.push_back({{"n", r.n}, {"scaled_epsilon", r.scaled_epsilon}, {"reference", r.reference}});
        out["epsilon_rows"] = eps;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_exp_ode(int family, int r, int mx, int mz) {
    OdeCheck chk = ode_check_family(family, r, mx, mz);
    json out;
    out["ok"] = chk.ok;
    if (!chk.ok) {
        const auto& mm = *chk.mismatch;
        out["mismatch"] = {{"x_deg", mm.x_deg}, {"z_deg", mm.z_deg}, {"y_deg", mm.y_deg},
                           {"lhs", mm.lhs.str()}, {"rhs", mm.rhs.str()}};
    }
    std::cout << out.dump(2) << "\n";
    return chk.ok ? 0 : 1;
}

// The cross-validation matrix: every counting path against every other on a
// battery of small instances.
int run_verify(const std::string& level) {
    bool full = (level == "full");
    if (!full && level != "quick") throw CLI::ValidationError("verify", "level must be quick or full");
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        static const std::vector<std::vector<std::vector<int>>> printed = {
            {{1}},
            {{1, 1}, {1}},
            {{2, 3, 1}, {5, 3}, {3}},
            {{6, 11, 6, 1}, {26, 26, 6}, {35, 15}, {15}},
            {{24, 50, 35, 10, 1}, {154, 200, 80, 10}, {340, 255, 45}, {315, 105}, {105}},
            {{120, 274, 225, 85, 15, 1}, {1044, 1604, 855, 190, 15}, {3304, 3325, 1050, 105},
             {4900, 2940, 420}, {3465, 945}, {945}}};
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            Triangle t(n);
            for (int i = n + 1; i <= 2 * n; ++i) {
                const auto& row = t.row(i);
                const auto& expect = printed[n - 1][i - n - 1];
                if (row.size() != expect.size()) ok = false;
                for (size_t j = 0; ok && j < row.size(); ++j)
                    if (row[j] != expect[j]) ok = false;
            }
        }
        report("triangle tables T(1)..T(6)", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= (full ? 12 : 8); ++n) ok = ok && first_row_stirling_check(n);
        report("first-row Stirling identity", ok);
    }
    {
        auto s = s_sequence(15);
        auto S = S_sequence(15);
        bool ok = (s[9] == Int("3551246162"));
        for (int n = 2; n <= 15; ++n) ok = ok && (2 * s[n - 1] == S[n - 2] + S[n - 1]);
        report("sequence s/S cross-identity", ok);
    }
    report("functional equation", functional_equation_check(full ? 10 : 6).ok);
    report("iterated functional equation (3-fold)", iterated_functional_equation_check(3, 6).ok);

    struct Case {
        const char* group;
        const char* sets;
    };
    std::vector<Case> cases = {{"Z8", "0,1;0,2"}, {"Z7", "0,1;0,2"}, {"Z5", "0;1;2"}};
    if (full) {
        cases.push_back({"Z16", "0,1;0,2;0,4"});
        cases.push_back({"Z2xZ9", "0,1;0,2;0,11"});
        cases.push_back({"S3", "0,1;0,2"});
        cases.push_back({"Z12", "0,1,2;0,3"});
    }
    for (const auto& c : cases) {
        SubsetFamily fam = family_from_flags(c.group, c.sets);
        std::string label = std::string(c.group) + " [" + c.sets + "]";
        GenericityResult gen = is_generic(fam);
        report("genericity of " + label, gen.generic);
        if (!gen.generic) continue;
        Int bf = count_packings_bruteforce(fam, scan_budget_from_env());
        Int uc = packing_count(fam.group().order(), fam.cardinalities());
        Int hf = alpha_via_hyperforest_sum(fam.group().order(), fam.cardinalities());
        report("universal count = brute force on " + label, uc == bf);
        report("hyperforest sum = brute force on " + label, hf == bf);
        if (fam.n() <= 3) {
            Int bm = alpha_via_boolean_moebius(fam, scan_budget_from_env());
            report("Boolean-lattice inversion = brute force on " + label, bm == bf);
        }
    }
    {
        bool ok = true;
        for (const auto& f : enumerate_hyperforests(full ? 5 : 4))
            if (moebius_recursive(f) != moebius_closed_form(f)) ok = false;
        report("Moebius recursion = closed form", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= (full ? 6 : 5); ++n)
            for (int k = 1; k < n; ++k)
                if (husimi_count(n, k) != Int(static_cast<long long>(enumerate_hypertrees(n, k).size()))) ok = false;
        report("Husimi hypertree counts", ok);
    }
    {
        SubsetFamily fam = family_from_flags("Z8", "0,1;0,2");
        bool ok = complement_covering_count(fam) == count_coverings_bruteforce(complement_family(fam));
        report("complement covering closed form", ok);
    }
    std::cout << (failures == 0 ? "VERIFY PASS" : "VERIFY FAIL") << " (" << (full ? "full" : "quick") << ")\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packings: exact packing counts in finite groups and the combinatorics behind them"};
    app.require_subcommand(1);

    // triangle
    auto* c_tri = app.add_subcommand("triangle", "print the triangular array T(n)");
    int tri_n = 1;
    c_tri->add_option("--n", tri_n, "level")->required()->check(CLI::Range(1, 1000));

    // seq
    auto* c_seq = app.add_subcommand("seq", "stream the sequences s(n) or S(n)");
    std::string seq_kind;
    int seq_max = 10;
    c_seq->add_option("kind", seq_kind, "s or S")->required();
    c_seq->add_option("--max", seq_max, "largest n")->required()->check(CLI::Range(1, 5000));

    // useries
    auto* c_us = app.add_subcommand("useries", "print the x-expansion of the universal series");
    int us_order = 4;
    std::string us_format = "plain";
    c_us->add_option("--order", us_order, "truncation order")->required()->check(CLI::Range(0, 40));
    c_us->add_option("--format", us_format, "plain|json");

    // count
    auto* c_count = app.add_subcommand("count", "universal packing count for a generic family");
    std::string count_group, count_sets, count_cards, count_format = "plain";
    long long count_N = 0;
    bool count_assume = false;
    c_count->add_option("--N", count_N, "group order (with --cards)");
    c_count->add_option("--cards", count_cards, "comma-separated cardinalities");
    c_count->add_option("--group", count_group, "group descriptor (with --sets)");
    c_count->add_option("--sets", count_sets, "semicolon-separated subsets");
    c_count->add_flag("--assume-generic", count_assume, "skip the genericity check");
    c_count->add_option("--format", count_format, "plain|json");

    // brute
    auto* c_brute = app.add_subcommand("brute", "exact packing count by exhaustive scan");
    std::string brute_group, brute_sets, brute_method = "scan";
    c_brute->add_option("--group", brute_group)->required();
    c_brute->add_option("--sets", brute_sets)->required();
    c_brute->add_option("--method", brute_method, "scan|boolean-moebius");

    // cover
    auto* c_cover = app.add_subcommand("cover", "covering counts");
    std::string cover_group, cover_sets, cover_method = "scan";
    c_cover->add_option("--group", cover_group)->required();
    c_cover->add_option("--sets", cover_sets)->required();
    c_cover->add_option("--method", cover_method, "scan|complement-formula");

    // generic-check
    auto* c_gen = app.add_subcommand("generic-check", "decide genericity, with witness on failure");
    std::string gen_group, gen_sets;
    c_gen->add_option("--group", gen_group)->required();
    c_gen->add_option("--sets", gen_sets)->required();

    // hf
    auto* c_hf = app.add_subcommand("hf", "hyperforest combinatorics");
    c_hf->require_subcommand(1);
    auto* c_hf_enum = c_hf->add_subcommand("enum", "enumerate HF(n)");
    int hf_n = 3;
    std::string hf_format = "plain";
    c_hf_enum->add_option("--n", hf_n)->required()->check(CLI::Range(0, 7));
    c_hf_enum->add_option("--format", hf_format, "plain|json");
    auto* c_hf_mu = c_hf->add_subcommand("moebius", "Moebius function of one hyperforest");
    std::string hf_edges;
    int hf_mu_n = 0;
    bool hf_mu_rec = false;
    c_hf_mu->add_option("--edges", hf_edges, "1-based hyperedges, e.g. \"1,2,3;3,4\"")->required();
    c_hf_mu->add_option("--n", hf_mu_n, "vertex count (default: largest label)");
    c_hf_mu->add_flag("--recursive", hf_mu_rec, "also compute the down-set recursion");
    auto* c_hf_alpha = c_hf->add_subcommand("alpha", "packing count via the hyperforest sum");
    long long hf_N = 0;
    std::string hf_cards;
    c_hf_alpha->add_option("--N", hf_N)->required();
    c_hf_alpha->add_option("--cards", hf_cards)->required();

    // check
    auto* c_check = app.add_subcommand("check", "symbolic identity checks");
    c_check->require_subcommand(1);
    auto* c_chk_feq = c_check->add_subcommand("functional-equation", "series functional equation");
    int chk_order = 10;
    c_chk_feq->add_option("--order", chk_order)->check(CLI::Range(1, 30));
    auto* c_chk_iter = c_check->add_subcommand("iterated", "n-fold functional equation");
    int chk_fold = 3, chk_iter_order = 6;
    c_chk_iter->add_option("--fold", chk_fold)->check(CLI::Range(1, 8));
    c_chk_iter->add_option("--order", chk_iter_order)->check(CLI::Range(1, 20));
    auto* c_chk_row = c_check->add_subcommand("first-row", "first-row Stirling identity");
    int chk_row_max = 12;
    c_chk_row->add_option("--max-n", chk_row_max)->check(CLI::Range(1, 200));

    // exp
    auto* c_exp = app.add_subcommand("exp", "numeric explorations");
    c_exp->require_subcommand(1);
    auto* c_exp_mod = c_exp->add_subcommand("mod-p", "s(n) mod p, periodicity, stabilization");
    int exp_p = 5, exp_mod_max = 0;
    c_exp_mod->add_option("--p", exp_p)->required()->check(CLI::Range(2, 97));
    c_exp_mod->add_option("--max-n", exp_mod_max, "residues to print (default 4p+20)");
    auto* c_exp_asy = c_exp->add_subcommand("asympt", "asymptotic ratio table");
    std::string exp_at;
    int exp_nmax = 400, exp_prec = 256;
    bool exp_eps = false;
    c_exp_asy->add_option("--at", exp_at, "comma-separated n values");
    c_exp_asy->add_option("--n-max", exp_nmax)->check(CLI::Range(1, 3000));
    c_exp_asy->add_option("--precision", exp_prec, "float mantissa bits (64|128|256|512)");
    c_exp_asy->add_flag("--epsilon", exp_eps, "include the error-term exploration rows");
    auto* c_exp_ode = c_exp->add_subcommand("ode", "power-specialization differential equation");
    int exp_r = 0, exp_mx = 4, exp_mz = 8, exp_family = 1;
    c_exp_ode->add_option("--r", exp_r)->check(CLI::Range(0, 10));
    c_exp_ode->add_option("--mx", exp_mx)->check(CLI::Range(1, 12));
    c_exp_ode->add_option("--mz", exp_mz)->check(CLI::Range(0, 60));
    c_exp_ode->add_option("--family", exp_family, "specialization family (only 1 is implemented)")
        ->check(CLI::Range(1, 5));

    // verify
    auto* c_verify = app.add_subcommand("verify", "run the cross-validation matrix");
    std::string verify_level = "quick";
    c_verify->add_option("--level", verify_level, "quick|full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_tri->parsed()) return run_triangle(tri_n);
        if (c_seq->parsed()) return run_seq(seq_kind, seq_max);
        if (c_us->parsed()) return run_useries(us_order, us_format);
        if (c_count->parsed())
            return run_count(count_group, count_sets, count_cards, count_N, count_assume, count_format);
        if (c_brute->parsed()) return run_brute(brute_group, brute_sets, brute_method);
        if (c_cover->parsed()) return run_cover(cover_group, cover_sets, cover_method);
        if (c_gen->parsed()) return run_generic_check(gen_group, gen_sets);
        if (c_hf->parsed()) {
            if (c_hf_enum->parsed()) return run_hf_enum(hf_n, hf_format);
            if (c_hf_mu->parsed()) return run_hf_moebius(hf_edges, hf_mu_n, hf_mu_rec);
            if (c_hf_alpha->parsed()) return run_hf_alpha(hf_N, hf_cards);
        }
        if (c_check->parsed()) {
            if (c_chk_feq->parsed())
                return report_equation_check("functional equation", functional_equation_check(chk_order));
            if (c_chk_iter->parsed())
                return report_equation_check("iterated functional equation",
                                             iterated_functional_equation_check(chk_fold, chk_iter_order));
            if (c_chk_row->parsed()) {
                for (int n = 1; n <= chk_row_max; ++n) {
                    if (!first_row_stirling_check(n)) {
                        std::cout << "FAIL first-row identity at n=" << n << "\n";
                        return 1;
                    }
                }
                std::cout << "PASS first-row identity for n=1.." << chk_row_max << "\n";
                return 0;
            }
        }
        if (c_exp->parsed()) {
            if (c_exp_mod->parsed()) return run_exp_mod_p(exp_p, exp_mod_max > 0 ? exp_mod_max : 4 * exp_p + 20);
            if (c_exp_asy->parsed()) return run_exp_asympt(exp_at, exp_nmax, exp_prec, exp_eps);
            if (c_exp_ode->parsed()) return run_exp_ode(exp_family, exp_r, exp_mx, exp_mz);
        }
        if (c_verify->parsed()) return run_verify(verify_level);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
