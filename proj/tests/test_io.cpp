#include "credence/io.hpp"

#include "credence/errors.hpp"

#include "cli_runner.hpp"
#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <map>
#include <string>

using namespace credence;
using namespace credence::testing;
using doctest::Contains;

namespace {

std::filesystem::path scratch_file(const std::string& name) {
    return scratch_dir() / name;
}

std::filesystem::path write_fixture(const std::string& name,
                                    const std::string& text) {
    const auto path = scratch_file(name);
    spit(path, text);
    return path;
}

} // namespace

TEST_CASE("mass files round trip") {
    const Frame posts = posts_frame();

    const auto drill = scratch_file("roundtrip_drill.json");
    save_mass(drill, posts_mass());
    CHECK(load_mass(drill) == posts_mass());

    const Frame pair(std::vector<std::string>{"a", "b"});
    const MassFunction open(pair,
                            {{pair.empty_set(), Rational(1, 4)},
                             {pair.subset({"a"}), Rational(3, 4)}},
                            WorldMode::Open);
    const auto open_path = scratch_file("roundtrip_open.json");
    save_mass(open_path, open);
    const MassFunction open_back = load_mass(open_path);
    CHECK(open_back == open);
    CHECK(open_back.mode() == WorldMode::Open);
    CHECK(slurp(open_path).find("\"open\"") != std::string::npos);

    const MassFunction point = bayesian(
        posts, {{"P1", Rational(1, 6)}, {"P2", Rational(1, 3)},
                {"P3", Rational(1, 2)}});
    const auto point_path = scratch_file("roundtrip_point.json");
    save_mass(point_path, point);
    CHECK(load_mass(point_path) == point);
}

TEST_CASE("mass files accept fractions, decimal strings and integers") {
    const auto path = write_fixture("mass_literal.json", R"({
      "frame": ["P1", "P2", "P3"],
      "mode": "closed",
      "masses": [
        {"set": ["P1"], "mass": "1/3"},
        {"set": ["P1", "P2"], "mass": "1/3"},
        {"set": ["P1", "P2", "P3"], "mass": "1/3"}
      ]
    })");
    CHECK(load_mass(path) == posts_mass());

    const auto mixed = write_fixture("mass_mixed.json", R"({
      "frame": ["a", "b"],
      "masses": [
        {"set": ["a"], "mass": "0.25"},
        {"set": ["a", "b"], "mass": "3/4"}
      ]
    })");
    const MassFunction m = load_mass(mixed);
    const Frame pair(std::vector<std::string>{"a", "b"});
    CHECK(m.mass(pair.subset({"a"})) == Rational(1, 4));
    CHECK(m.mode() == WorldMode::Closed);

    const auto integer = write_fixture("mass_integer.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["a"], "mass": 1}]
    })");
    CHECK(load_mass(integer) == categorical(pair, pair.subset({"a"})));

    // saving canonicalizes to fractions
    const auto out = scratch_file("mass_canonical.json");
    save_mass(out, m);
    const std::string text = slurp(out);
    CHECK(text.find("\"1/4\"") != std::string::npos);
    CHECK(text.find("0.25") == std::string::npos);
}

TEST_CASE("mass file validation errors") {
    const auto no_frame = write_fixture("bad_no_frame.json",
                                        R"({"masses": []})");
    CHECK_THROWS_WITH_AS(load_mass(no_frame), "missing field \"frame\"",
                         ValidationError);

    const auto no_masses = write_fixture(
        "bad_no_masses.json", R"({"frame": ["a", "b"]})");
    CHECK_THROWS_WITH_AS(load_mass(no_masses), "missing field \"masses\"",
                         ValidationError);

    const auto both = write_fixture("bad_both.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["a"], "mass": 1}],
      "bel": [{"set": ["a"], "value": 1}]
    })");
    CHECK_THROWS_WITH_AS(load_mass(both),
                         "give either \"masses\" or \"bel\", not both",
                         ValidationError);

    const auto real_number = write_fixture("bad_real.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["a"], "mass": 0.25},
                 {"set": ["b"], "mass": "3/4"}]
    })");
    CHECK_THROWS_WITH(load_mass(real_number),
                      Contains("non-integer numbers lose exactness"));

    const auto duplicate = write_fixture("bad_duplicate.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["a"], "mass": "1/2"},
                 {"set": ["a"], "mass": "1/2"}]
    })");
    CHECK_THROWS_WITH(load_mass(duplicate), Contains("duplicate set {a}"));

    const auto unknown = write_fixture("bad_unknown_label.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["c"], "mass": 1}]
    })");
    CHECK_THROWS_WITH(load_mass(unknown),
                      Contains("masses[0].set: unknown label c"));

    const auto missing_mass = write_fixture("bad_missing_mass.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["a"]}]
    })");
    CHECK_THROWS_WITH(load_mass(missing_mass),
                      Contains("missing field \"mass\""));

    const auto bad_mode = write_fixture("bad_mode.json", R"({
      "frame": ["a", "b"],
      "mode": "ajar",
      "masses": [{"set": ["a"], "mass": 1}]
    })");
    CHECK_THROWS_WITH_AS(load_mass(bad_mode),
                         "mode must be \"closed\" or \"open\"",
                         ValidationError);

    const auto bad_sum = write_fixture("bad_sum.json", R"({
      "frame": ["a", "b"],
      "masses": [{"set": ["a"], "mass": "1/2"},
                 {"set": ["b"], "mass": "1/3"}]
    })");
    CHECK_THROWS_WITH(load_mass(bad_sum), Contains("sum to 5/6"));
}

TEST_CASE("belief-table files invert to masses") {
    const auto table = write_fixture("bel_point.json", R"({
      "frame": ["a", "b"],
      "bel": [
        {"set": [], "value": 0},
        {"set": ["a"], "value": "1/2"},
        {"set": ["b"], "value": "1/2"},
        {"set": ["a", "b"], "value": 1}
      ]
    })");
    const Frame pair(std::vector<std::string>{"a", "b"});
    CHECK(load_mass(table) ==
          bayesian(pair, {{"a", Rational(1, 2)}, {"b", Rational(1, 2)}}));

    const auto open_table = write_fixture("bel_open.json", R"({
      "frame": ["a", "b"],
      "mode": "open",
      "bel": [
        {"set": ["a"], "value": "1/4"},
        {"set": ["b"], "value": "1/4"},
        {"set": ["a", "b"], "value": "3/4"}
      ]
    })");
    const MassFunction open = load_mass(open_table);
    CHECK(open.mode() == WorldMode::Open);
    CHECK(open.empty_set_mass() == Rational(1, 4));
    CHECK(open.mass(pair.subset({"a"})) == Rational(1, 4));
    CHECK(open.mass(pair.full_set()) == Rational(1, 4));
}

TEST_CASE("belief-table files that are not belief functions are rejected") {
    const auto bad = write_fixture("bel_not_belief.json", R"({
      "frame": ["a", "b"],
      "bel": [
        {"set": ["a"], "value": "3/4"},
        {"set": ["b"], "value": "3/4"},
        {"set": ["a", "b"], "value": 1}
      ]
    })");
    CHECK_THROWS_WITH(load_mass(bad),
                      Contains("inverted mass of {a,b} is -1/2"));

    const auto incomplete = write_fixture("bel_incomplete.json", R"({
      "frame": ["a", "b"],
      "bel": [{"set": ["a", "b"], "value": 1}]
    })");
    CHECK_THROWS_WITH(load_mass(incomplete),
                      Contains("missing value for {a}"));

    const auto dup = write_fixture("bel_duplicate.json", R"({
      "frame": ["a", "b"],
      "bel": [
        {"set": ["a"], "value": "1/2"},
        {"set": ["a"], "value": "1/2"},
        {"set": ["b"], "value": "1/2"},
        {"set": ["a", "b"], "value": 1}
      ]
    })");
    CHECK_THROWS_WITH(load_mass(dup), Contains("duplicate set {a}"));

    const auto dirty_empty = write_fixture("bel_dirty_empty.json", R"({
      "frame": ["a", "b"],
      "bel": [
        {"set": [], "value": "1/9"},
        {"set": ["a"], "value": "1/2"},
        {"set": ["b"], "value": "1/2"},
        {"set": ["a", "b"], "value": 1}
      ]
    })");
    CHECK_THROWS_WITH(load_mass(dirty_empty),
                      Contains("bel of the empty set must be 0"));
}

TEST_CASE("source files load the evidence space") {
    const auto path = write_fixture("source_guards.json", R"({
      "X": ["S1", "S2", "S3"],
      "p": ["1/3", "1/3", "1/3"],
      "Y": ["P1", "P2", "P3"],
      "M": {
        "S1": ["P1", "P2"],
        "S2": ["P1", "P2", "P3"],
        "S3": ["P1"]
      }
    })");
    CHECK(load_source(path) == guards_source());

    const auto not_object = write_fixture("source_bad_m.json", R"({
      "X": ["S1"], "p": [1], "Y": ["P1"], "M": ["P1"]
    })");
    CHECK_THROWS_WITH_AS(load_source(not_object),
                         "M must be an object keyed by X labels",
                         ValidationError);

    const auto stray = write_fixture("source_stray_key.json", R"({
      "X": ["S1"], "p": [1], "Y": ["P1"],
      "M": {"S1": ["P1"], "S9": ["P1"]}
    })");
    CHECK_THROWS_WITH_AS(load_source(stray), "M: unknown label S9",
                         ValidationError);

    const auto gap = write_fixture("source_missing_image.json", R"({
      "X": ["S1", "S2"], "p": ["1/2", "1/2"], "Y": ["P1"],
      "M": {"S1": ["P1"]}
    })");
    CHECK_THROWS_WITH_AS(load_source(gap), "M: missing image for S2",
                         ValidationError);

    const auto bad_sum = write_fixture("source_bad_sum.json", R"({
      "X": ["S1", "S2"], "p": ["1/2", "1/3"], "Y": ["P1"],
      "M": {"S1": ["P1"], "S2": []}
    })");
    CHECK_THROWS_AS(load_source(bad_sum), ValidationError);
}

TEST_CASE("scenario files rebuild the worlds table") {
    const std::string base = R"({
      "outcomes": ["P1", "P2", "P3"],
      "sources": [
        {"name": "S1", "prob": "1/3", "options": ["P1", "P2"]},
        {"name": "S2", "prob": "1/3", "options": ["P1", "P2", "P3"]},
        {"name": "S3", "prob": "1/3", "options": ["P1"]}
      ])";

    const auto plain = write_fixture("scenario_plain.json", base + "}");
    const Scenario sc = load_scenario(plain);
    CHECK(sc.world_count() == 6);
    CHECK(sc.source_count() == 3);
    CHECK(sc.induced_mass(Normalize::Yes) == posts_mass());
    CHECK(sc.to_source() == soldiers_scenario().to_source());

    const auto killed = write_fixture(
        "scenario_killed.json",
        base + R"(, "killed_worlds": ["w2", "w4", "w5", "w6"]})");
    const MassFunction narrowed =
        load_scenario(killed).induced_mass(Normalize::Yes);
    const Frame posts = posts_frame();
    CHECK(narrowed.mass(posts.subset({"P1"})) == Rational(2, 3));
    CHECK(narrowed.mass(posts.subset({"P1", "P3"})) == Rational(1, 3));

    const auto pairs = write_fixture(
        "scenario_pairs.json",
        base + R"(, "killed_pairs": [["w2", "S2"], ["w4", "S1"],
                   ["w5", "S1"], ["w5", "S2"], ["w6", "S1"]]})");
    CHECK(load_scenario(pairs).induced_mass(Normalize::Yes) == narrowed);

    const auto bad_pairs = write_fixture(
        "scenario_bad_pairs.json",
        base + R"(, "killed_pairs": [["w2", "S2", "extra"]]})");
    CHECK_THROWS_WITH(load_scenario(bad_pairs),
                      Contains("[world, source] string pairs"));

    const auto worse_pairs = write_fixture(
        "scenario_worse_pairs.json",
        base + R"(, "killed_pairs": {"w2": "S2"}})");
    CHECK_THROWS_WITH(load_scenario(worse_pairs),
                      Contains("must be an array"));

    const auto no_sources = write_fixture(
        "scenario_no_sources.json", R"({"outcomes": ["P1"]})");
    CHECK_THROWS_WITH_AS(load_scenario(no_sources),
                         "missing field \"sources\"", ValidationError);
}

TEST_CASE("set expressions parse against a frame") {
    const Frame posts = posts_frame();
    CHECK(parse_set_expression(posts, "{P1,P3}") ==
          posts.subset({"P1", "P3"}));
    CHECK(parse_set_expression(posts, " { P1 , P3 } ") ==
          posts.subset({"P1", "P3"}));
    CHECK(parse_set_expression(posts, "{P2}") == posts.singleton("P2"));
    CHECK(parse_set_expression(posts, "{}") == posts.empty_set());
    CHECK(parse_set_expression(posts, "{P1,P2,P3}") == posts.full_set());

    CHECK_THROWS_WITH(parse_set_expression(posts, "P1,P3"),
                      Contains("must look like {P1,P3}"));
    CHECK_THROWS_WITH(parse_set_expression(posts, "{P9}"),
                      Contains("unknown label P9"));
    CHECK_THROWS_WITH(parse_set_expression(posts, "{P1,,P3}"),
                      Contains("empty label in set expression"));
}

TEST_CASE("unreadable and malformed files fail loudly") {
    CHECK_THROWS_WITH(load_mass(scratch_dir() / "no_such_file.json"),
                      Contains("cannot open"));
    const auto garbage = write_fixture("garbage.json", "not json {{{");
    CHECK_THROWS_WITH(load_mass(garbage), Contains("parse error"));
}
