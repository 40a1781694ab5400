#include "packings/hyperforest.hpp"
#include "packings/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace packings;

namespace {

// |HF(n)| assembled independently: hypertrees per block from the Stirling
// closed form, composed over set partitions of the vertex set.
long long hyperforest_count_oracle(int n) {
    StirlingTables st(8);
    auto hypertrees_on = [&](int m) -> long long {
        if (m == 1) return 1;
        long long total = 0;
        for (int k = 1; k < m; ++k) {
            Int c = int_pow(Int(m), k - 1) * st.s2(m - 1, k);
            total += c.convert_to<long long>();
        }
        return total;
    };
    // compose over set partitions by recursion on the block containing the
    // smallest remaining vertex
    std::function<long long(int)> count = [&](int remaining) -> long long {
        if (remaining == 0) return 1;
        long long total = 0;
        for (int block = 1; block <= remaining; ++block) {
            Int ways = binomial(remaining - 1, block - 1);
            total += ways.convert_to<long long>() * hypertrees_on(block) * count(remaining - block);
        }
        return total;
    };
    return count(n);
}

}  // namespace

TEST_CASE("hyperforest recognition") {
    REQUIRE(is_hyperforest({{0, 1}, {1, 2}}, 3));
    REQUIRE_FALSE(is_hyperforest({{0, 1}, {1, 2}, {0, 2}}, 3));
    REQUIRE(is_hyperforest({{0, 1, 2}, {2, 3, 4}}, 5));
    REQUIRE_FALSE(is_hyperforest({{0, 1, 2}, {1, 2, 3}}, 4));  // shares two vertices
    REQUIRE(is_hyperforest({}, 4));
    REQUIRE_FALSE(is_hyperforest({{0}}, 2));  // undersized hyperedge
    REQUIRE_THROWS_AS(Hyperforest(3, {{0, 1}, {0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
    REQUIRE(enumerate_hyperforests(0).size() == 1);
    REQUIRE(enumerate_hyperforests(3).size() == 8);
    for (int n = 1; n <= 5; ++n)
        REQUIRE(enumerate_hyperforests(n).size() == static_cast<size_t>(hyperforest_count_oracle(n)));
    REQUIRE(enumerate_hypertrees(3, 1).size() == 1);
    REQUIRE(enumerate_hypertrees(3, 2).size() == 3);
    REQUIRE(enumerate_hypertrees(4, 3).size() == 16);  // Cayley: 4^2 labelled trees
    REQUIRE_THROWS_AS(enumerate_hyperforests(8), std::invalid_argument);

    // canonical order, no duplicates
    auto all = enumerate_hyperforests(4);
    for (size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1] < all[i]);
}

TEST_CASE("poset order") {
    Hyperforest trivial = Hyperforest::trivial(3);
    Hyperforest e12(3, {{0, 1}});
    Hyperforest big(3, {{0, 1, 2}});
    Hyperforest path(3, {{0, 2}, {1, 2}});
    REQUIRE(poset_leq(trivial, big));
    REQUIRE(poset_leq(e12, big));
    REQUIRE_FALSE(poset_leq(e12, path));
    REQUIRE(poset_leq(big, big));
}

TEST_CASE("Moebius function") {
    REQUIRE(moebius_closed_form(Hyperforest(2, {{0, 1}})) == -1);
    REQUIRE(moebius_closed_form(Hyperforest(4, {{0, 1, 2, 3}})) == -2);
    REQUIRE(moebius_closed_form(Hyperforest(4, {{0, 1}, {2, 3}})) == 1);

    for (int j = 2; j <= 5; ++j) {
        std::vector<int> edge(j);
        std::iota(edge.begin(), edge.end(), 0);
        REQUIRE(moebius_recursive(Hyperforest(j, {edge})) == -factorial(j - 2));
    }

    MoebiusTable table(4);
    for (const auto& f : table.all()) REQUIRE(table.mu(f) == moebius_closed_form(f));
}

TEST_CASE("Moebius restriction under an added isolated vertex") {
    for (const auto& f : enumerate_hyperforests(3)) {
        Hyperforest lifted(4, f.edges());
        REQUIRE(moebius_recursive(f) == moebius_recursive(lifted));
    }
}

TEST_CASE("hyperforest sum counts packings") {
    REQUIRE(alpha_via_hyperforest_sum(8, {2, 2}) == 32);
    REQUIRE(alpha_via_hyperforest_sum(16, {2, 2, 2}) == 1664);
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> singles(n, 1);
        for (int N : {5, 9})
            REQUIRE(alpha_via_hyperforest_sum(N, singles) == falling_factorial(N, n));
    }
}

TEST_CASE("Husimi counts") {
    StirlingTables st(6);
    REQUIRE(husimi_count(3, 2) == 3);
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k)
            REQUIRE(husimi_count(n, k) == Int(static_cast<long long>(enumerate_hypertrees(n, k).size())));
        REQUIRE(husimi_count(n, n - 1) == int_pow(Int(n), n - 2));  // ordinary labelled trees
    }
}

TEST_CASE("weighted hypertree identity") {
    // single hyperedge, unit weights
    REQUIRE(weighted_hypertree_sum(3, 1, {Int(1), Int(1), Int(1)}) == 1);
    // all 2-edges: ordinary labelled trees, every factor 0! = 1
    REQUIRE(weighted_hypertree_sum(4, 3, {Int(1), Int(1), Int(1), Int(1)}) == 16);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> w(1, 5);
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Int> s;
                for (int j = 0; j < n; ++j) s.emplace_back(w(rng));
                REQUIRE_NOTHROW(weighted_hypertree_sum(n, k, s));  // self-checks against the closed form
            }
}

TEST_CASE("HF(n) is a lattice on sampled pairs") {
    auto all = enumerate_hyperforests(4);
    std::mt19937 rng(17);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    auto meet_join = [&](const Hyperforest& a, const Hyperforest& b) {
        std::vector<const Hyperforest*> lower, upper;
        for (const auto& f : all) {
            if (poset_leq(f, a) && poset_leq(f, b)) lower.push_back(&f);
            if (poset_leq(a, f) && poset_leq(b, f)) upper.push_back(&f);
        }
        const Hyperforest* meet = nullptr;
        for (const auto* f : lower) {
            bool maximal = true;
            for (const auto* g : lower)
                if (g != f && poset_leq(*f, *g)) maximal = false;
            if (maximal) {
                REQUIRE(meet == nullptr);  // unique maximal lower bound
                meet = f;
            }
        }
        const Hyperforest* join = nullptr;
        for (const auto* f : upper) {
            bool minimal = true;
            for (const auto* g : upper)
                if (g != f && poset_leq(*g, *f)) minimal = false;
            if (minimal) {
                REQUIRE(join == nullptr);  // unique minimal upper bound
                join = f;
            }
        }
        REQUIRE(meet != nullptr);
        REQUIRE(join != nullptr);
        return std::make_pair(meet, join);
    };
    for (int trial = 0; trial < 12; ++trial) {
        const Hyperforest& a = all[pick(rng)];
        const Hyperforest& b = all[pick(rng)];
        auto [meet, join] = meet_join(a, b);
        // absorption
        auto [m2, j2] = meet_join(a, *join);
        REQUIRE(*m2 == a);
        auto [m3, j3] = meet_join(a, *meet);
        REQUIRE(*j3 == a);
    }
}

TEST_CASE("primal graph recognition") {
    // bowtie: two triangles at a shared vertex is a block graph
    IntersectionGraph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto f = as_hyperforest_primal(bowtie);
    REQUIRE(f.has_value());
    REQUIRE(f->edges() == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    REQUIRE(f->primal_graph() == bowtie);

    // diamond: K4 minus an edge is not
    IntersectionGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    REQUIRE_FALSE(as_hyperforest_primal(diamond).has_value());

    // C4 is not
    IntersectionGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    REQUIRE_FALSE(as_hyperforest_primal(c4).has_value());
}
