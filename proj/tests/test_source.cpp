#include "credence/errors.hpp"
#include "credence/random_gen.hpp"
#include "credence/source.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <random>

using namespace credence;
using namespace credence::testing;

TEST_CASE("source construction is validated") {
    const Frame posts = posts_frame();
    CHECK_THROWS_AS(
        MultivaluedSource({}, {}, posts, {}), ValidationError);
    CHECK_THROWS_AS(
        MultivaluedSource({"x", "x"}, {Rational(1, 2), Rational(1, 2)},
                          posts, {posts.full_set(), posts.full_set()}),
        ValidationError);
    CHECK_THROWS_AS(
        MultivaluedSource({"x"}, {Rational(1, 2)}, posts,
                          {posts.full_set()}),
        ValidationError);
    CHECK_THROWS_AS(
        MultivaluedSource({"x", "y"}, {Rational(1, 2), Rational(1, 2)},
                          posts, {posts.full_set()}),
        ValidationError);
    CHECK_THROWS_AS(
        MultivaluedSource({"x", "y"}, {Rational(3, 2), Rational(-1, 2)},
                          posts, {posts.full_set(), posts.full_set()}),
        ValidationError);

    const Frame pair(std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(
        MultivaluedSource({"x"}, {Rational(1)}, posts, {pair.full_set()}),
        ValidationError);

    CHECK(guards_source().index_of("S2") == 1);
    CHECK_THROWS_AS(guards_source().index_of("S9"), ValidationError);
}

TEST_CASE("the guards induce the drill mass") {
    const MultivaluedSource s = guards_source();
    CHECK(induced_mass(s, Normalize::Yes) == posts_mass());
    CHECK(induced_mass(s, Normalize::No) == posts_mass());
}

TEST_CASE("all-covering images induce the vacuous mass") {
    const Frame posts = posts_frame();
    const MultivaluedSource s({"x", "y"},
                              {Rational(1, 2), Rational(1, 2)}, posts,
                              {posts.full_set(), posts.full_set()});
    CHECK(induced_mass(s, Normalize::Yes) == vacuous(posts));
}

TEST_CASE("empty images split the world modes") {
    const Frame pair(std::vector<std::string>{"a", "b"});
    const MultivaluedSource s({"x1", "x2"},
                              {Rational(1, 2), Rational(1, 2)}, pair,
                              {pair.subset({"a"}), pair.empty_set()});

    const MassFunction closed = induced_mass(s, Normalize::Yes);
    CHECK(closed == categorical(pair, pair.subset({"a"})));

    const MassFunction open = induced_mass(s, Normalize::No);
    CHECK(open.mode() == WorldMode::Open);
    CHECK(open.empty_set_mass() == Rational(1, 2));
    CHECK(open.mass(pair.subset({"a"})) == Rational(1, 2));

    const MultivaluedSource hopeless({"x"}, {Rational(1)}, pair,
                                     {pair.empty_set()});
    CHECK_THROWS_AS(induced_mass(hopeless, Normalize::Yes), ConflictError);
    CHECK(induced_mass(hopeless, Normalize::No).empty_set_mass() == 1);
}

TEST_CASE("induced bel/pl are the direct source-probability sums") {
    std::mt19937_64 rng(301);
    for (int i = 0; i < 40; ++i) {
        const MultivaluedSource s = random_source(rng, 5, 4);
        const MassFunction open = induced_mass(s, Normalize::No);
        for (const auto& a : all_subsets(s.target())) {
            Rational lower = 0, upper = 0;
            for (int x = 0; x < s.size(); ++x) {
                if (!s.image(x).is_empty() && s.image(x).subset_of(a))
                    lower += s.probability(x);
                if (s.image(x).intersects(a)) upper += s.probability(x);
            }
            CHECK(open.bel(a) == lower);
            CHECK(open.pl(a) == upper);
        }
    }
}

TEST_CASE("conditioning the mapping intersects the images") {
    const Frame posts = posts_frame();
    const MultivaluedSource s = guards_source();
    const SubsetMask b = posts.subset({"P1", "P3"});

    const MultivaluedSource after = condition_mapping(s, b);
    CHECK(after.image(0) == posts.subset({"P1"}));
    CHECK(after.image(1) == b);
    CHECK(after.image(2) == posts.subset({"P1"}));
    CHECK(after.probabilities() == s.probabilities());
    CHECK(induced_mass(after, Normalize::Yes).bel(posts.subset({"P1"})) ==
          Rational(2, 3));

    CHECK(condition_mapping(s, posts.full_set()) == s);
}

TEST_CASE("mapping conditioning can empty an image") {
    const Frame pair(std::vector<std::string>{"a", "b"});
    const MultivaluedSource s({"x1", "x2"},
                              {Rational(1, 2), Rational(1, 2)}, pair,
                              {pair.subset({"a"}), pair.subset({"b"})});
    const MultivaluedSource after = condition_mapping(s, pair.subset({"a"}));
    CHECK(after.image(1).is_empty());
    CHECK(induced_mass(after, Normalize::Yes) ==
          categorical(pair, pair.subset({"a"})));
}

TEST_CASE("mapping conditioning commutes with the induced transfer") {
    std::mt19937_64 rng(302);
    for (int i = 0; i < 40; ++i) {
        const MultivaluedSource s = random_source(rng, 5, 4);
        for (const auto& b : nonempty_subsets(s.target())) {
            const MultivaluedSource conditioned = condition_mapping(s, b);
            for (const Normalize flag : {Normalize::Yes, Normalize::No}) {
                try {
                    const MassFunction via_mapping =
                        induced_mass(conditioned, flag);
                    const MassFunction via_transfer =
                        d_condition(induced_mass(s, flag), b, flag).mass;
                    CHECK(via_mapping == via_transfer);
                } catch (const ConflictError&) {
                    // both routes must agree that conditioning is undefined
                    CHECK_THROWS_AS(
                        d_condition(induced_mass(s, flag), b, flag).mass,
                        ConflictError);
                }
            }
        }
    }
}

TEST_CASE("conditioning the source rescales the probabilities") {
    const Frame posts = posts_frame();
    const MultivaluedSource s = guards_source();

    const MultivaluedSource two = condition_source(s, {"S1", "S2"});
    CHECK(two.probability(0) == Rational(1, 2));
    CHECK(two.probability(1) == Rational(1, 2));
    CHECK(two.probability(2) == 0);
    CHECK(two.images() == s.images());

    const MassFunction m = induced_mass(two, Normalize::Yes);
    CHECK(m.bel(posts.subset({"P1", "P2"})) == Rational(1, 2));
    CHECK(m.bel(posts.subset({"P1"})) == 0);

    CHECK(condition_source(s, {"S1", "S2", "S3"}) == s);

    const MassFunction lone =
        induced_mass(condition_source(s, {"S3"}), Normalize::Yes);
    CHECK(lone == categorical(posts, posts.subset({"P1"})));

    CHECK_THROWS_AS(condition_source(s, {"S9"}), ValidationError);
    CHECK_THROWS_AS(condition_source(two, {"S3"}), ConflictError);
}

TEST_CASE("the two conditionings commute") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 40; ++i) {
        const MultivaluedSource s = random_source(rng, 5, 4);
        // pick a label set with positive probability
        std::vector<std::string> allowed;
        for (int x = 0; x < s.size(); ++x)
            if (x % 2 == i % 2 || s.size() == 1) allowed.push_back(s.label(x));
        Rational total = 0;
        for (const auto& name : allowed)
            total += s.probability(s.index_of(name));
        if (total == 0) continue;
        for (const auto& b : nonempty_subsets(s.target())) {
            CHECK(condition_mapping(condition_source(s, allowed), b) ==
                  condition_source(condition_mapping(s, b), allowed));
        }
    }
}

TEST_CASE("successive mapping conditionings compose by intersection") {
    std::mt19937_64 rng(304);
    for (int i = 0; i < 40; ++i) {
        const MultivaluedSource s = random_source(rng, 5, 4);
        for (const auto& b1 : nonempty_subsets(s.target()))
            for (const auto& b2 : nonempty_subsets(s.target()))
                CHECK(condition_mapping(condition_mapping(s, b1), b2) ==
                      condition_mapping(s, b1 & b2));
    }
}

TEST_CASE("source-level envelope conditioning") {
    const Frame posts = posts_frame();
    const MultivaluedSource s = guards_source();

    const IntervalResult g = g_condition_source(
        s, posts.subset({"P1"}), posts.subset({"P1", "P3"}));
    CHECK(g.lower == Rational(1, 2));
    CHECK(g.upper == 1);

    const IntervalResult sure =
        g_condition_source(s, posts.full_set(), posts.subset({"P1", "P3"}));
    CHECK(sure.lower == 1);
    CHECK(sure.upper == 1);

    // singleton images behave like a plain probability space
    const MultivaluedSource pointlike(
        {"x1", "x2"}, {Rational(1, 4), Rational(3, 4)}, posts,
        {posts.subset({"P1"}), posts.subset({"P2"})});
    const IntervalResult point = g_condition_source(
        pointlike, posts.subset({"P1"}), posts.subset({"P1", "P2"}));
    CHECK(point.lower == Rational(1, 4));
    CHECK(point.upper == Rational(1, 4));
}
