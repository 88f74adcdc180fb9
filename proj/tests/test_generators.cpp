#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "magnetite/generators.hpp"
#include "support/reference.hpp"

using namespace magnetite;

namespace {

const AmbientGroup kZ(1, IntVec{});
const AmbientGroup kZ2(2, IntVec{});

GroupElement el(const AmbientGroup& g, IntVec coords) {
    return GroupElement::from_flat(g, coords);
}

FgMonoid monoid(const AmbientGroup& g, std::vector<IntVec> gens) {
    std::vector<GroupElement> elements;
    for (IntVec& v : gens) elements.push_back(el(g, v));
    return FgMonoid(g, std::move(elements));
}

std::set<GroupElement> as_set(const std::vector<GroupElement>& xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("minimal generators of basic monoids") {
    CHECK(minimal_generators(monoid(kZ, {{1}})) ==
          std::vector<GroupElement>{el(kZ, {1})});

    auto e23 = minimal_generators(monoid(kZ, {{2}, {3}}));
    CHECK(as_set(e23) == as_set({el(kZ, {2}), el(kZ, {3})}));

    auto e3 = minimal_generators(monoid(kZ2, {{1, -1}, {1, 0}, {1, 1}}));
    CHECK(e3.size() == 3);

    // 4 = 2+2 and 5 = 2+3 are redundant.
    auto e2345 = minimal_generators(monoid(kZ, {{2}, {3}, {4}, {5}}));
    CHECK(as_set(e2345) == as_set({el(kZ, {2}), el(kZ, {3})}));

    CHECK_THROWS_AS(minimal_generators(monoid(kZ2, {{1, 0}, {-1, 0}, {0, 1}})),
                    NotSharpError);
}

TEST_CASE("is_minimal_generating") {
    CHECK(is_minimal_generating(monoid(kZ, {{1}}), {el(kZ, {1})}));
    // The group Z generated by {1,-1}: a removal-minimal generating set of a
    // non-sharp monoid.
    CHECK(is_minimal_generating(monoid(kZ, {{1}, {-1}}),
                                {el(kZ, {1}), el(kZ, {-1})}));
    CHECK_FALSE(is_minimal_generating(monoid(kZ, {{2}, {3}}), {el(kZ, {2})}));
    CHECK_FALSE(is_minimal_generating(monoid(kZ, {{2}, {3}}),
                                      {el(kZ, {2}), el(kZ, {3}), el(kZ, {5})}));
    CHECK_THROWS_AS(
        is_minimal_generating(monoid(kZ, {{2}, {3}}), {el(kZ, {1})}),
        ValidationError);
}

TEST_CASE("greedy removal is order independent") {
    std::mt19937 rng(99);
    std::vector<FgMonoid> cases{
        monoid(kZ, {{2}, {3}, {4}, {5}, {7}}),
        monoid(kZ, {{4}, {6}, {9}, {10}, {13}}),
        monoid(kZ2, {{1, -1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}}),
    };
    for (const FgMonoid& m : cases) {
        auto canonical = as_set(minimal_generators(m));
        std::vector<std::size_t> order(m.gens().size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (int perm = 0; perm < 20; ++perm) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(as_set(minimal_generators_with_order(m, order)) == canonical);
        }
    }
}

TEST_CASE("every original generator regenerates from the minimal set") {
    std::mt19937 rng(1234);
    testref::RandomMonoidParams params;
    int tested = 0;
    for (int iter = 0; iter < 60 && tested < 25; ++iter) {
        FgMonoid m = testref::random_monoid(rng, params);
        if (!is_sharp(m) || m.gens().empty()) continue;
        ++tested;
        auto e = minimal_generators(m);
        FgMonoid span(m.group(), e);
        for (const GroupElement& g : m.gens()) {
            CHECK(contains(span, g).contained);
        }
        CHECK(is_minimal_generating(m, e));
    }
    CHECK(tested >= 10);
}

TEST_CASE("proper subsets of the minimal set lose an element") {
    // For B' strictly inside B inside E, some b in B \ B' escapes [B'>.
    std::mt19937 rng(777);
    FgMonoid m = monoid(kZ, {{4}, {6}, {9}, {10}, {13}});
    auto e = minimal_generators(m);
    REQUIRE(e.size() >= 3);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<GroupElement> b, bprime;
        for (const GroupElement& x : e) {
            int roll = std::uniform_int_distribution<int>(0, 2)(rng);
            if (roll > 0) b.push_back(x);
            if (roll > 1) bprime.push_back(x);
        }
        if (bprime.size() == b.size()) continue;  // need a strict subset
        FgMonoid span(kZ, bprime);
        bool escaped = false;
        for (const GroupElement& x : b) {
            if (std::find(bprime.begin(), bprime.end(), x) != bprime.end()) continue;
            if (!contains(span, x).contained) escaped = true;
        }
        CHECK(escaped);
    }
}

}  // TEST_SUITE
