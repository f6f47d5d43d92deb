#include <doctest.h>

#include <random>
#include <set>

#include <magnus/tree.hpp>

using magnus::Tree;

namespace
{

Tree random_tree(std::size_t n, std::mt19937_64 &rng)
{
    if (n == 1) {
        return Tree::leaf();
    }
    // Random composition of n - 1: cut points chosen independently.
    std::bernoulli_distribution cut(0.5);
    std::vector<std::size_t> parts{1};
    for (std::size_t i = 1; i < n - 1; ++i) {
        if (cut(rng)) {
            parts.push_back(1);
        } else {
            ++parts.back();
        }
    }
    std::vector<Tree> children;
    for (std::size_t p : parts) {
        children.push_back(random_tree(p, rng));
    }
    return Tree::node(std::move(children));
}

magnus::BigInt catalan(std::size_t k)
{
    // C_k = binom(2k, k) / (k + 1)
    return magnus::binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k)) / (k + 1);
}

} // namespace

TEST_CASE("small tree sets")
{
    const auto one = magnus::enumerate(1);
    REQUIRE(one.members.size() == 1);
    CHECK(one.members[0].is_leaf());

    const auto three = magnus::enumerate(3);
    REQUIRE(three.members.size() == 2);
    CHECK(magnus::serialize(three.members[0]) == "((L))");
    CHECK(magnus::serialize(three.members[1]) == "(L L)");

    CHECK(magnus::enumerate(4).members.size() == 5);
    CHECK_THROWS_AS(magnus::enumerate(0), std::invalid_argument);
}

TEST_CASE("canonical order for four leaves")
{
    std::vector<std::string> got;
    for (const auto &t : magnus::enumerate(4).members) {
        got.push_back(magnus::serialize(t));
    }
    const std::vector<std::string> expected = {"(((L)))", "((L L))", "(L (L))", "((L) L)", "(L L L)"};
    CHECK(got == expected);
}

TEST_CASE("enumeration size matches the Catalan count through n = 14")
{
    for (std::size_t n = 1; n <= 14; ++n) {
        CAPTURE(n);
        const auto set = magnus::enumerate(n);
        CHECK(magnus::BigInt(set.members.size()) == magnus::count(n));
        CHECK(magnus::count(n) == catalan(n - 1));
    }
    CHECK(magnus::count(10) == 4862);
}

TEST_CASE("every enumerated tree has n leaves and appears once")
{
    for (std::size_t n = 1; n <= 10; ++n) {
        std::set<std::string> seen;
        for (const auto &t : magnus::enumerate(n).members) {
            CHECK(t.leaves() == n);
            CHECK(seen.insert(magnus::serialize(t)).second);
        }
    }
}

TEST_CASE("decompose inverts node construction")
{
    const Tree l = Tree::leaf();
    const Tree pair = Tree::node({l, l});
    const auto parts = magnus::decompose(pair);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == l);
    CHECK(parts[1] == l);

    const Tree single = Tree::node({Tree::node({l})});
    REQUIRE(magnus::decompose(single).size() == 1);
    CHECK(magnus::serialize(magnus::decompose(single)[0]) == "(L)");

    const Tree seven = magnus::parse("((L) ((L) L))");
    CHECK(seven.leaves() == 7);
    const auto grafts = magnus::decompose(seven);
    REQUIRE(grafts.size() == 2);
    CHECK(grafts[0].leaves() == 2);
    CHECK(grafts[1].leaves() == 4);

    CHECK_THROWS_AS(magnus::decompose(l), magnus::NoDecomposition);
    CHECK_THROWS_AS(Tree::node({}), std::invalid_argument);
}

TEST_CASE("serialization")
{
    CHECK(magnus::serialize(Tree::leaf()) == "L");
    CHECK(magnus::serialize(Tree::node({Tree::leaf(), Tree::leaf()})) == "(L L)");
}

TEST_CASE("parse round-trips 1000 random trees")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int i = 0; i < 1000; ++i) {
        const Tree t = random_tree(size(rng), rng);
        const std::string text = magnus::serialize(t);
        const Tree back = magnus::parse(text);
        REQUIRE(back == t);
        REQUIRE(magnus::serialize(back) == text);
    }
}

TEST_CASE("parse errors carry the byte offset")
{
    auto offset_of = [](const char *text) -> std::size_t {
        try {
            (void)magnus::parse(text);
        } catch (const magnus::TreeParseError &e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("X") == 0);
    CHECK(offset_of("(L") == 2);
    CHECK(offset_of("()") == 1);
    CHECK(offset_of("L L") == 1);
    CHECK(offset_of("(L  L)") == 3);
}

TEST_CASE("commutator expressions")
{
    CHECK(magnus::to_commutator_expression(Tree::leaf()) == "H(t1)");
    CHECK(magnus::to_commutator_expression(magnus::parse("(L)")) == "[H(t1), ∫_0^{t1} dt2 H(t2)]");
    CHECK(magnus::to_commutator_expression(magnus::parse("((L))")) ==
          "[H(t1), ∫_0^{t1} dt2 [H(t2), ∫_0^{t2} dt3 H(t3)]]");
    CHECK(magnus::to_commutator_expression(magnus::parse("(L L)")) ==
          "[[H(t1), ∫_0^{t1} dt2 H(t2)], ∫_0^{t1} dt3 H(t3)]");
}
