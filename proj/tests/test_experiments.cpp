#include "packings/experiments.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace packings;

TEST_CASE("s mod p matches the exact sequence") {
    auto s = s_sequence(20);
    for (int p : {2, 3, 5, 7, 11, 13}) {
        auto residues = s_mod_p(p, 20);
        for (int n = 1; n <= 20; ++n) REQUIRE(Int(residues[n - 1]) == s[n - 1] % p);
    }
    REQUIRE(s_mod_p(2, 10) == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    REQUIRE(s_mod_p(3, 10) == std::vector<int>{1, 2, 1, 1, 2, 2, 1, 1, 2, 2});
}

TEST_CASE("periods exist and replay soundly") {
    for (int p : {2, 3, 5, 7}) {
        PeriodInfo info = find_period_mod_p(p);
        REQUIRE(info.found);
        REQUIRE(info.period >= 1);
        // replaying three full periods reproduces the residue stream
        int window = info.preperiod + 4 * info.period;
        auto residues = s_mod_p(p, window);
        for (int idx = info.preperiod; idx + info.period < window; ++idx)
            REQUIRE(residues[idx] == residues[idx + info.period]);
    }
}

TEST_CASE("mod-p stabilization against the printed constants") {
    for (int p : {2, 3, 5, 7, 11}) {
        ModularAlphaReport rep = modular_alpha_check(p);
        INFO("p = " << p);
        REQUIRE(rep.all_agree);
        REQUIRE(!rep.entries.empty());
    }
    // p = 13 would need alpha_11, beyond the printed list
    REQUIRE_THROWS_AS(modular_alpha_check(13), std::invalid_argument);
}

TEST_CASE("asymptotic report") {
    AsymptoticReport rep = asymptotic_report({50, 100}, 256);
    REQUIRE(rep.rows.size() == 2);
    REQUIRE(rep.rows[0].n == 50);
    // r(n) -> 1 from above at these sizes; deviation shrinks
    double d50 = std::stod(rep.rows[0].dev0);
    double d100 = std::stod(rep.rows[1].dev0);
    REQUIRE(d50 > 0);
    REQUIRE(d100 > 0);
    REQUIRE(d100 < d50);
    // first-order correction improves the fit
    REQUIRE(std::abs(std::stod(rep.rows[0].dev1)) < d50);
    REQUIRE(std::abs(std::stod(rep.rows[1].dev1)) < d100);

    SECTION("bit-for-bit reproducible at fixed precision") {
        AsymptoticReport again = asymptotic_report({50, 100}, 256);
        for (size_t i = 0; i < rep.rows.size(); ++i) {
            REQUIRE(rep.rows[i].r == again.rows[i].r);
            REQUIRE(rep.rows[i].peak_ratio == again.rows[i].peak_ratio);
        }
    }
    SECTION("other precisions are available") {
        REQUIRE(asymptotic_report({30}, 128).rows.size() == 1);
        REQUIRE_THROWS_AS(asymptotic_report({30}, 100), std::invalid_argument);
    }
}

TEST_CASE("power-specialization differential equation") {
    REQUIRE(ode_check_power_spec(0, 4, 8).ok);
    REQUIRE(ode_check_power_spec(1, 3, 8).ok);
    REQUIRE(ode_check_power_spec(0, 1, 8).ok);  // degenerate linear case
    REQUIRE(ode_check_power_spec(2, 3, 12).ok);

    REQUIRE(ode_check_family(1, 0, 4, 8).ok);
    REQUIRE_THROWS_AS(ode_check_family(2, 0, 3, 8), std::logic_error);
    REQUIRE_THROWS_AS(ode_check_family(6, 0, 3, 8), std::invalid_argument);
}

TEST_CASE("epsilon exploration emits report rows") {
    auto rows = epsilon_report();
    REQUIRE(rows.size() == 9);
    for (const auto& r : rows) {
        REQUIRE(!r.scaled_epsilon.empty());
        REQUIRE(!r.reference.empty());
    }
}
