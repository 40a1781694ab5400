#include "packings/group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

using namespace packings;

namespace {

void check_axioms_exhaustively(const FiniteGroup& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        REQUIRE(g.mul(0, a) == a);
        REQUIRE(g.mul(a, 0) == a);
        REQUIRE(g.mul(a, g.inv(a)) == 0);
        REQUIRE(g.mul(g.inv(a), a) == 0);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

}  // namespace

TEST_CASE("cyclic group arithmetic") {
    FiniteGroup z8 = FiniteGroup::cyclic(8);
    REQUIRE(z8.order() == 8);
    REQUIRE(z8.abelian());
    REQUIRE(z8.mul(3, 7) == 2);
    REQUIRE(z8.inv(3) == 5);
    REQUIRE(translate(z8, 3, {0, 1}) == Subset{3, 4});
    REQUIRE(inverse_set(z8, {0, 1}) == Subset{0, 7});
    REQUIRE(difference_set(z8, {0, 1}) == Subset{0, 1, 7});
    REQUIRE(difference_set(z8, {0, 2}) == Subset{0, 2, 6});
    REQUIRE(difference_set(z8, {5}) == Subset{0});
}

TEST_CASE("product group is the abelian direct product") {
    FiniteGroup g = FiniteGroup::product({2, 3});
    REQUIRE(g.order() == 6);
    REQUIRE(g.abelian());
    check_axioms_exhaustively(g);
    // (1,1) has order 6, so the product is cyclic of order 6
    int x = 1 * 3 + 1;
    int acc = x;
    int ord = 1;
    while (acc != 0) {
        acc = g.mul(acc, x);
        ++ord;
    }
    REQUIRE(ord == 6);
}

TEST_CASE("symmetric group S3") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    REQUIRE(s3.order() == 6);
    REQUIRE_FALSE(s3.abelian());
    check_axioms_exhaustively(s3);
    // exactly three involutions (the transpositions) square to the identity
    int involutions = 0;
    for (int a = 1; a < 6; ++a)
        if (s3.mul(a, a) == 0) ++involutions;
    REQUIRE(involutions == 3);
    REQUIRE(FiniteGroup::symmetric(4).order() == 24);
    REQUIRE_THROWS_AS(FiniteGroup::symmetric(7), std::invalid_argument);
}

TEST_CASE("explicit tables are validated and re-indexed") {
    // Z3 written with the identity at label 2
    // labels {0,1,2} stand for residues {1,2,0}
    std::vector<int> t = {
        1, 2, 0,   // 1+1=2, 1+2=0, 1+0=1
        2, 0, 1,   // 2+1=0, 2+2=1, 2+0=2
        0, 1, 2};  // 0+x=x
    FiniteGroup g = FiniteGroup::from_table(3, t);
    REQUIRE(g.order() == 3);
    check_axioms_exhaustively(g);
    REQUIRE(g.abelian());

    SECTION("row repeats are rejected") {
        std::vector<int> bad = {0, 1, 2, 1, 1, 0, 2, 0, 1};
        REQUIRE_THROWS_AS(FiniteGroup::from_table(3, bad), std::invalid_argument);
    }
    SECTION("a nonassociative loop is rejected") {
        std::vector<int> loop = {
            0, 1, 2, 3, 4,
            1, 0, 3, 4, 2,
            2, 4, 0, 1, 3,
            3, 2, 4, 0, 1,
            4, 3, 1, 2, 0};
        REQUIRE_THROWS_AS(FiniteGroup::from_table(5, loop), std::invalid_argument);
    }
    SECTION("zero order is rejected") {
        REQUIRE_THROWS_AS(FiniteGroup::from_table(0, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(FiniteGroup::cyclic(0), std::invalid_argument);
    }
}

TEST_CASE("group descriptor parsing") {
    REQUIRE(FiniteGroup::parse("Z8").order() == 8);
    REQUIRE(FiniteGroup::parse("Z2xZ3").order() == 6);
    REQUIRE(FiniteGroup::parse("Z2xZ9").order() == 18);
    REQUIRE(FiniteGroup::parse("S3").order() == 6);
    REQUIRE_THROWS_AS(FiniteGroup::parse("Q8"), std::invalid_argument);
    REQUIRE_THROWS_AS(FiniteGroup::parse(""), std::invalid_argument);

    auto path = std::filesystem::temp_directory_path() / "packings_z4_table.txt";
    {
        std::ofstream out(path);
        out << "4\n";
        out << "0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
    }
    FiniteGroup g = FiniteGroup::parse(path.string());
    REQUIRE(g.order() == 4);
    REQUIRE(g.mul(1, 3) == 0);
}

TEST_CASE("subset algebra properties") {
    std::mt19937 rng(7);
    for (const auto& g : {FiniteGroup::cyclic(12), FiniteGroup::product({2, 9}), FiniteGroup::symmetric(4)}) {
        std::uniform_int_distribution<int> elem(0, g.order() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            Subset s;
            int size = 1 + trial % 4;
            while (static_cast<int>(s.size()) < size) {
                s.push_back(elem(rng));
                s = normalize_subset(std::move(s));
            }
            int a = elem(rng);
            REQUIRE(translate(g, a, s).size() == s.size());
            REQUIRE(inverse_set(g, inverse_set(g, s)) == s);
            Subset d = difference_set(g, s);
            REQUIRE(std::binary_search(d.begin(), d.end(), 0));
            REQUIRE(inverse_set(g, d) == d);
            REQUIRE(d.size() <= s.size() * s.size());
        }
    }
}

TEST_CASE("subset family validation") {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    REQUIRE(SubsetFamily(z4, {}).n() == 0);
    REQUIRE(SubsetFamily(z4, {{0, 1}, {2}}).n() == 2);
    REQUIRE_THROWS_AS(SubsetFamily(z4, {{}}), std::invalid_argument);
    REQUIRE_THROWS_AS(SubsetFamily(z4, {{0, 4}}), std::invalid_argument);
}
