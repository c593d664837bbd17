// Command-line front end: exact belief-function queries, the conditioning
// rules side by side, possible-worlds scenarios, evidence combination, and
// the brute-force credal-set verifier.
//
// Exit codes: 0 success, 1 verification found violations, 2 input/parse
// error, 3 conflict/undefined conditioning, 4 resource budget exceeded.

#include "credence/conditioning.hpp"
#include "credence/credal.hpp"
#include "credence/errors.hpp"
#include "credence/io.hpp"
#include "credence/random_gen.hpp"
#include "credence/scenario.hpp"
#include "credence/source.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace credence;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rendering

std::string value_cell(const Rational& r) {
    return to_fraction(r) + " (" + to_decimal(r) + ")";
}

std::string interval_cell(const IntervalResult& iv) {
    return "[" + to_fraction(iv.lower) + ", " + to_fraction(iv.upper) + "]";
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
        width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            text += cells[c];
            if (c + 1 < cells.size())
                text.append(width[c] - cells[c].size() + 2, ' ');
        }
        std::cout << text << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < header.size(); ++c)
        rule.push_back(std::string(width[c], '-'));
    line(rule);
    for (const auto& row : rows) line(row);
}

void add_interval_json(ordered_json& row, const IntervalResult& iv) {
    row["lower"] = to_fraction(iv.lower);
    row["lower_decimal"] = to_decimal(iv.lower);
    row["upper"] = to_fraction(iv.upper);
    row["upper_decimal"] = to_decimal(iv.upper);
}

ordered_json belpl_row_json(const MassFunction& m, const SubsetMask& s) {
    ordered_json row;
    row["set"] = m.frame().format_subset(s);
    row["bel"] = to_fraction(m.bel(s));
    row["bel_decimal"] = to_decimal(m.bel(s));
    row["pl"] = to_fraction(m.pl(s));
    row["pl_decimal"] = to_decimal(m.pl(s));
    return row;
}

std::vector<std::string> belpl_row(const MassFunction& m,
                                   const SubsetMask& s) {
    return {m.frame().format_subset(s), value_cell(m.bel(s)),
            value_cell(m.pl(s))};
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

// Subsets shown when no explicit query list is given: every nonempty subset
// (smallest first) while that is readable, singletons plus the full frame
// beyond that.
std::vector<SubsetMask> display_sets(const Frame& frame) {
    std::vector<SubsetMask> sets;
    if (frame.size() <= 6) {
        for (std::uint32_t bits = 1;
             bits < (std::uint32_t{1} << frame.size()); ++bits)
            sets.push_back(SubsetMask::of_bits(frame.size(), bits));
        std::sort(sets.begin(), sets.end(),
                  [](const SubsetMask& a, const SubsetMask& b) {
                      return std::pair(a.count(), a.bits()) <
                             std::pair(b.count(), b.bits());
                  });
    } else {
        for (int i = 0; i < frame.size(); ++i)
            sets.push_back(SubsetMask::singleton(frame.size(), i));
        sets.push_back(frame.full_set());
    }
    return sets;
}

std::vector<SubsetMask> singleton_sets(const Frame& frame) {
    std::vector<SubsetMask> sets;
    for (int i = 0; i < frame.size(); ++i)
        sets.push_back(SubsetMask::singleton(frame.size(), i));
    return sets;
}

// ---------------------------------------------------------------------------
// Input plumbing

MassFunction mass_input(const std::string& file, const std::string& demo) {
    if (!demo.empty()) {
        if (demo != "soldiers")
            throw ValidationError("unknown demo \"" + demo +
                                  "\" (available: soldiers)");
        if (!file.empty())
            throw ValidationError("give a mass file or --demo, not both");
        return soldiers_mass();
    }
    if (file.empty())
        throw ValidationError("a mass file (or --demo soldiers) is required");
    return load_mass(file);
}

std::vector<std::string> split_list(const std::string& text,
                                    const std::string& what) {
    std::vector<std::string> out;
    std::string item;
    auto flush = [&] {
        if (item.empty())
            throw ValidationError("empty " + what + " in list: " + text);
        out.push_back(item);
        item.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',')
            flush();
        else
            item.push_back(c);
    }
    flush();
    return out;
}

std::vector<std::pair<std::string, std::string>>
split_pairs(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& token : split_list(text, "pair")) {
        const std::size_t colon = token.find(':');
        if (colon == std::string::npos || colon == 0 ||
            colon + 1 == token.size())
            throw ValidationError("pairs are world:source tokens like "
                                  "w2:S2, got: " +
                                  token);
        out.emplace_back(token.substr(0, colon), token.substr(colon + 1));
    }
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string text;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) text += ",";
        text += items[i];
    }
    return text;
}

// ---------------------------------------------------------------------------
// query

struct QueryOptions {
    std::vector<std::string> args;
    std::string demo;
    bool json_out = false;
};

int run_query(const QueryOptions& opt) {
    std::vector<std::string> expressions = opt.args;
    std::string file;
    if (opt.demo.empty()) {
        if (expressions.empty())
            throw ValidationError(
                "a mass file (or --demo soldiers) is required");
        file = expressions.front();
        expressions.erase(expressions.begin());
    }
    if (expressions.empty())
        throw ValidationError("at least one set expression is required");

    const MassFunction m = mass_input(file, opt.demo);
    std::vector<std::vector<std::string>> rows;
    ordered_json json_rows = ordered_json::array();
    for (const auto& expr : expressions) {
        const SubsetMask s = parse_set_expression(m.frame(), expr);
        rows.push_back(belpl_row(m, s));
        json_rows.push_back(belpl_row_json(m, s));
    }

    if (opt.json_out) {
        ordered_json doc;
        doc["command"] = "query";
        doc["frame"] = m.frame().labels();
        doc["mode"] = m.mode() == WorldMode::Open ? "open" : "closed";
        doc["rows"] = std::move(json_rows);
        emit_json(doc);
    } else {
        print_table({"set", "bel", "pl"}, rows);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// condition

struct ConditionOptions {
    std::string file;
    std::string demo;
    std::string on;
    std::string rule = "dempster";
    std::vector<std::string> queries;
    std::string out;
    bool json_out = false;
};

int run_condition(const ConditionOptions& opt) {
    const MassFunction m = mass_input(opt.file, opt.demo);
    const SubsetMask b = parse_set_expression(m.frame(), opt.on);

    std::vector<SubsetMask> sets = singleton_sets(m.frame());
    for (const auto& expr : opt.queries)
        sets.push_back(parse_set_expression(m.frame(), expr));

    ordered_json doc;
    doc["command"] = "condition";
    doc["on"] = m.frame().format_subset(b);
    doc["rule"] = opt.rule;

    if (opt.rule == "robust") {
        if (!opt.out.empty())
            throw ValidationError("--rule robust yields probability bounds, "
                                  "not a mass function; --out is unavailable");
        std::vector<std::vector<std::string>> rows;
        ordered_json json_rows = ordered_json::array();
        for (const auto& s : sets) {
            const IntervalResult iv = g_condition(m, s, b);
            rows.push_back({m.frame().format_subset(s),
                            value_cell(iv.lower), value_cell(iv.upper)});
            ordered_json row;
            row["set"] = m.frame().format_subset(s);
            add_interval_json(row, iv);
            json_rows.push_back(std::move(row));
        }
        if (opt.json_out) {
            doc["rows"] = std::move(json_rows);
            emit_json(doc);
        } else {
            std::cout << "rule: robust\non: " << m.frame().format_subset(b)
                      << "\n\n";
            print_table({"set", "lower", "upper"}, rows);
        }
        return 0;
    }

    const Normalize normalize =
        opt.rule == "open" ? Normalize::No : Normalize::Yes;
    const DempsterOutcome outcome = d_condition(m, b, normalize);

    std::vector<std::vector<std::string>> rows;
    ordered_json json_rows = ordered_json::array();
    for (const auto& s : sets) {
        rows.push_back(belpl_row(outcome.mass, s));
        json_rows.push_back(belpl_row_json(outcome.mass, s));
    }

    if (!opt.out.empty()) {
        save_mass(opt.out, outcome.mass);
        std::cerr << "wrote: " << opt.out << '\n';
    }

    if (opt.json_out) {
        doc["conflict"] = to_fraction(outcome.conflict);
        doc["conflict_decimal"] = to_decimal(outcome.conflict);
        doc["rows"] = std::move(json_rows);
        emit_json(doc);
    } else {
        std::cout << "rule: " << opt.rule
                  << "\non: " << m.frame().format_subset(b)
                  << "\nconflict: " << value_cell(outcome.conflict) << "\n\n";
        print_table({"set", "bel", "pl"}, rows);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// compare

struct CompareOptions {
    std::string file;
    std::string demo;
    std::string on;
    std::vector<std::string> queries;
    int random = 0;
    std::uint64_t seed = 0;
    int frame_size = 4;
    bool json_out = false;
};

ordered_json compare_row_json(const std::string& query,
                              const RuleComparison& cmp) {
    ordered_json row;
    row["query"] = query;
    ordered_json d;
    add_interval_json(d, cmp.dempster);
    row["dempster"] = std::move(d);
    ordered_json g;
    add_interval_json(g, cmp.robust);
    row["robust"] = std::move(g);
    row["contained"] = cmp.dempster_within_robust();
    return row;
}

int run_compare(const CompareOptions& opt) {
    ordered_json doc;
    doc["command"] = "compare";

    if (opt.random > 0) {
        if (!opt.file.empty() || !opt.demo.empty() || !opt.on.empty() ||
            !opt.queries.empty())
            throw ValidationError(
                "--random replaces the mass file, --on and --query");
        if (opt.frame_size < 1 || opt.frame_size > kMaxFrameSize)
            throw ValidationError("--frame-size must be between 1 and " +
                                  std::to_string(kMaxFrameSize));
        std::mt19937_64 rng(opt.seed);
        std::vector<std::vector<std::string>> rows;
        ordered_json json_rows = ordered_json::array();
        int contained = 0;
        for (int i = 1; i <= opt.random; ++i) {
            const Frame frame = random_frame(rng, opt.frame_size);
            const MassFunction m = random_mass(rng, frame);
            const SubsetMask a = random_subset(rng, frame);
            SubsetMask b = random_nonempty_subset(rng, frame);
            for (int tries = 0; m.pl(b) == 0 && tries < 64; ++tries)
                b = random_nonempty_subset(rng, frame);
            if (m.pl(b) == 0) b = frame.full_set();

            const RuleComparison cmp = compare_rules(m, a, b);
            if (cmp.dempster_within_robust()) ++contained;
            rows.push_back({std::to_string(i), std::to_string(frame.size()),
                            frame.format_subset(a), frame.format_subset(b),
                            interval_cell(cmp.dempster),
                            interval_cell(cmp.robust),
                            cmp.dempster_within_robust() ? "yes" : "no"});
            ordered_json row = compare_row_json(frame.format_subset(a), cmp);
            row["index"] = i;
            row["frame_size"] = frame.size();
            row["on"] = frame.format_subset(b);
            json_rows.push_back(std::move(row));
        }
        if (opt.json_out) {
            doc["random"] = opt.random;
            doc["seed"] = opt.seed;
            doc["frame_size_max"] = opt.frame_size;
            doc["contained"] = contained;
            doc["rows"] = std::move(json_rows);
            emit_json(doc);
        } else {
            std::cout << "random: " << opt.random << "\nseed: " << opt.seed
                      << "\nframe-size: " << opt.frame_size << "\n\n";
            print_table({"#", "n", "A", "B", "dempster", "robust",
                         "contained"},
                        rows);
            std::cout << "\ncontainment: " << contained << "/" << opt.random
                      << '\n';
        }
        return 0;
    }

    if (opt.on.empty())
        throw ValidationError("--on is required (or use --random)");
    const MassFunction m = mass_input(opt.file, opt.demo);
    const SubsetMask b = parse_set_expression(m.frame(), opt.on);

    std::vector<SubsetMask> sets;
    if (opt.queries.empty())
        sets = singleton_sets(m.frame());
    else
        for (const auto& expr : opt.queries)
            sets.push_back(parse_set_expression(m.frame(), expr));

    std::vector<std::vector<std::string>> rows;
    ordered_json json_rows = ordered_json::array();
    for (const auto& s : sets) {
        const RuleComparison cmp = compare_rules(m, s, b);
        rows.push_back({m.frame().format_subset(s),
                        interval_cell(cmp.dempster), interval_cell(cmp.robust),
                        cmp.dempster_within_robust() ? "yes" : "no"});
        json_rows.push_back(compare_row_json(m.frame().format_subset(s), cmp));
    }

    if (opt.json_out) {
        doc["on"] = m.frame().format_subset(b);
        doc["rows"] = std::move(json_rows);
        emit_json(doc);
    } else {
        std::cout << "on: " << m.frame().format_subset(b) << "\n\n";
        print_table({"query", "dempster", "robust", "contained"}, rows);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// scenario

struct ScenarioOp {
    enum Kind { KillWorlds, KillPairs, Observe, Restrict } kind;
    std::string arg;
};

struct ScenarioOptions {
    std::string file;
    std::string demo;
    std::vector<ScenarioOp> ops;
    bool json_out = false;
};

int run_scenario(const ScenarioOptions& opt) {
    Scenario sc = [&] {
        if (!opt.demo.empty()) {
            if (opt.demo != "soldiers")
                throw ValidationError("unknown demo \"" + opt.demo +
                                      "\" (available: soldiers)");
            if (!opt.file.empty())
                throw ValidationError(
                    "give a scenario file or --demo, not both");
            return soldiers_scenario();
        }
        if (opt.file.empty())
            throw ValidationError(
                "a scenario file (or --demo soldiers) is required");
        return load_scenario(opt.file);
    }();

    ordered_json steps = ordered_json::array();
    int step = 0;
    const auto emit_step = [&](const std::string& label) {
        const MassFunction m = sc.induced_mass(Normalize::Yes);
        std::vector<std::vector<std::string>> rows;
        ordered_json json_rows = ordered_json::array();
        for (const auto& s : display_sets(sc.outcomes())) {
            rows.push_back(belpl_row(m, s));
            json_rows.push_back(belpl_row_json(m, s));
        }
        if (opt.json_out) {
            ordered_json entry;
            entry["step"] = step;
            entry["label"] = label;
            entry["rows"] = std::move(json_rows);
            steps.push_back(std::move(entry));
        } else {
            if (step) std::cout << '\n';
            std::cout << "step " << step << ": " << label << "\n\n";
            print_table({"set", "bel", "pl"}, rows);
        }
        ++step;
    };

    emit_step("initial");
    for (const auto& op : opt.ops) {
        switch (op.kind) {
        case ScenarioOp::KillWorlds: {
            const auto worlds = split_list(op.arg, "world");
            sc = sc.kill_worlds(worlds);
            emit_step("kill worlds " + join(worlds));
            break;
        }
        case ScenarioOp::KillPairs: {
            const auto pairs = split_pairs(op.arg);
            sc = sc.kill_pairs(pairs);
            std::vector<std::string> tokens;
            for (const auto& [w, s] : pairs) tokens.push_back(w + ":" + s);
            emit_step("kill pairs " + join(tokens));
            break;
        }
        case ScenarioOp::Observe: {
            const SubsetMask possible =
                parse_set_expression(sc.outcomes(), op.arg);
            sc = sc.observe_outcomes(possible);
            emit_step("observe " + sc.outcomes().format_subset(possible));
            break;
        }
        case ScenarioOp::Restrict: {
            const auto sources = split_list(op.arg, "source");
            sc = sc.restrict_sources(sources);
            emit_step("restrict sources " + join(sources));
            break;
        }
        }
    }

    if (opt.json_out) {
        ordered_json doc;
        doc["command"] = "scenario";
        doc["outcomes"] = sc.outcomes().labels();
        doc["steps"] = std::move(steps);
        emit_json(doc);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string file;
    std::string demo;
    int random = 0;
    std::uint64_t seed = 0;
    int frame_size = 4;
    bool json_out = false;
};

int run_verify(const VerifyOptions& opt) {
    VerificationReport report;
    if (opt.random > 0) {
        if (!opt.file.empty() || !opt.demo.empty())
            throw ValidationError("--random replaces the mass file");
        if (opt.frame_size < 1 || opt.frame_size > kVerifyMaxFrameSize)
            throw ValidationError("--frame-size must be between 1 and " +
                                  std::to_string(kVerifyMaxFrameSize));
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < opt.random; ++i) {
            const Frame frame = random_frame(rng, opt.frame_size);
            report.merge(verify_against_closed_forms(
                random_mass(rng, frame)));
        }
    } else {
        report = verify_against_closed_forms(mass_input(opt.file, opt.demo));
    }

    if (opt.json_out) {
        ordered_json doc;
        doc["command"] = "verify";
        doc["masses_checked"] = report.masses_checked;
        doc["envelope_checks"] = report.envelope_checks;
        doc["conditional_checks"] = report.conditional_checks;
        doc["containment_checks"] = report.containment_checks;
        doc["transfer_checks"] = report.transfer_checks;
        doc["violations"] = report.violations;
        emit_json(doc);
    } else {
        std::cout << "masses checked: " << report.masses_checked
                  << "\nenvelope checks: " << report.envelope_checks
                  << "\nconditional checks: " << report.conditional_checks
                  << "\ncontainment checks: " << report.containment_checks
                  << "\ntransfer checks: " << report.transfer_checks
                  << "\nviolations: " << report.violations.size() << '\n';
        for (const auto& v : report.violations)
            std::cout << "violation: " << v << '\n';
    }
    return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// combine

struct CombineOptions {
    std::vector<std::string> files;
    std::string demo;
    std::string rule = "dempster";
    std::string out;
    bool json_out = false;
};

int run_combine(const CombineOptions& opt) {
    std::vector<MassFunction> operands;
    if (!opt.demo.empty()) {
        if (opt.demo != "soldiers")
            throw ValidationError("unknown demo \"" + opt.demo +
                                  "\" (available: soldiers)");
        operands.push_back(soldiers_mass());
    }
    for (const auto& file : opt.files) operands.push_back(load_mass(file));
    if (operands.size() != 2)
        throw ValidationError("combine needs exactly two masses (two files, "
                              "or --demo soldiers and one file)");

    const Normalize normalize =
        opt.rule == "open" ? Normalize::No : Normalize::Yes;
    const DempsterOutcome outcome =
        combine_dempster(operands[0], operands[1], normalize);

    if (!opt.out.empty()) {
        save_mass(opt.out, outcome.mass);
        std::cerr << "wrote: " << opt.out << '\n';
    }

    if (opt.json_out) {
        ordered_json doc;
        doc["command"] = "combine";
        doc["rule"] = opt.rule;
        doc["conflict"] = to_fraction(outcome.conflict);
        doc["conflict_decimal"] = to_decimal(outcome.conflict);
        ordered_json masses = ordered_json::array();
        for (const auto& [s, v] : outcome.mass.focal()) {
            ordered_json entry;
            entry["set"] = outcome.mass.frame().format_subset(s);
            entry["mass"] = to_fraction(v);
            entry["mass_decimal"] = to_decimal(v);
            masses.push_back(std::move(entry));
        }
        doc["masses"] = std::move(masses);
        emit_json(doc);
    } else {
        std::cout << "rule: " << opt.rule
                  << "\nconflict: " << value_cell(outcome.conflict) << "\n\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& [s, v] : outcome.mass.focal())
            rows.push_back(
                {outcome.mass.frame().format_subset(s), value_cell(v)});
        print_table({"set", "mass"}, rows);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact belief-function engine: queries, Dempster vs "
                 "credal-envelope conditioning, possible-worlds scenarios, "
                 "and a brute-force verifier."};
    app.require_subcommand(1);
    int exit_code = 0;

    QueryOptions query_opt;
    auto* query = app.add_subcommand(
        "query", "Exact bel/pl of subsets under a mass function");
    query->add_option("args", query_opt.args,
                      "mass file, then set expressions like {P1,P3}");
    query->add_option("--demo", query_opt.demo,
                      "built-in input (soldiers) instead of a file");
    query->add_flag("--json", query_opt.json_out, "machine-readable output");
    query->callback([&] { exit_code = run_query(query_opt); });

    ConditionOptions cond_opt;
    auto* cond = app.add_subcommand(
        "condition", "Condition a mass function on a subset");
    cond->add_option("file", cond_opt.file, "mass file");
    cond->add_option("--demo", cond_opt.demo,
                     "built-in input (soldiers) instead of a file");
    cond->add_option("--on", cond_opt.on, "conditioning set, e.g. {P1,P3}")
        ->required();
    cond->add_option("--rule", cond_opt.rule,
                     "dempster (normalized), open (keep conflict on the "
                     "empty set), or robust (envelope bounds)")
        ->check(CLI::IsMember({"dempster", "open", "robust"}));
    cond->add_option("--query", cond_opt.queries,
                     "extra sets to report besides the singletons");
    cond->add_option("--out", cond_opt.out, "write the conditioned mass file");
    cond->add_flag("--json", cond_opt.json_out, "machine-readable output");
    cond->callback([&] { exit_code = run_condition(cond_opt); });

    CompareOptions cmp_opt;
    auto* cmp = app.add_subcommand(
        "compare", "Dempster vs robust conditioning side by side");
    cmp->add_option("file", cmp_opt.file, "mass file");
    cmp->add_option("--demo", cmp_opt.demo,
                    "built-in input (soldiers) instead of a file");
    cmp->add_option("--on", cmp_opt.on, "conditioning set");
    cmp->add_option("--query", cmp_opt.queries,
                    "sets to compare (default: all singletons)");
    cmp->add_option("--random", cmp_opt.random,
                    "compare on N random masses instead of a file");
    cmp->add_option("--seed", cmp_opt.seed, "random seed (default 0)");
    cmp->add_option("--frame-size", cmp_opt.frame_size,
                    "max frame size for --random (default 4)");
    cmp->add_flag("--json", cmp_opt.json_out, "machine-readable output");
    cmp->callback([&] { exit_code = run_compare(cmp_opt); });

    ScenarioOptions sc_opt;
    auto* sc = app.add_subcommand(
        "scenario",
        "Replay a possible-worlds scenario, applying evidence in order");
    sc->add_option("file", sc_opt.file, "scenario file");
    sc->add_option("--demo", sc_opt.demo,
                   "built-in scenario (soldiers) instead of a file");
    sc->add_option_function<std::string>(
          "--case1",
          [&](const std::string& v) {
              sc_opt.ops.push_back({ScenarioOp::KillWorlds, v});
          },
          "kill whole worlds, e.g. w2,w4,w5,w6")
        ->trigger_on_parse();
    sc->add_option_function<std::string>(
          "--case2",
          [&](const std::string& v) {
              sc_opt.ops.push_back({ScenarioOp::KillPairs, v});
          },
          "kill world:source pairs, e.g. w2:S2,w4:S1")
        ->trigger_on_parse();
    sc->add_option_function<std::string>(
          "--observe",
          [&](const std::string& v) {
              sc_opt.ops.push_back({ScenarioOp::Observe, v});
          },
          "observe that only these outcomes are possible, e.g. {P1,P3}")
        ->trigger_on_parse();
    sc->add_option_function<std::string>(
          "--case3",
          [&](const std::string& v) {
              sc_opt.ops.push_back({ScenarioOp::Restrict, v});
          },
          "restrict selection to these sources, e.g. S1,S2")
        ->trigger_on_parse();
    sc->add_flag("--json", sc_opt.json_out, "machine-readable output");
    sc->callback([&] { exit_code = run_scenario(sc_opt); });

    VerifyOptions ver_opt;
    auto* ver = app.add_subcommand(
        "verify",
        "Check the conditioning closed forms against the credal-set oracle");
    ver->add_option("file", ver_opt.file, "mass file");
    ver->add_option("--demo", ver_opt.demo,
                    "built-in input (soldiers) instead of a file");
    ver->add_option("--random", ver_opt.random,
                    "verify N random masses instead of a file");
    ver->add_option("--seed", ver_opt.seed, "random seed (default 0)");
    ver->add_option("--frame-size", ver_opt.frame_size,
                    "max frame size for --random (default 4)");
    ver->add_flag("--json", ver_opt.json_out, "machine-readable output");
    ver->callback([&] { exit_code = run_verify(ver_opt); });

    CombineOptions comb_opt;
    auto* comb = app.add_subcommand(
        "combine", "Orthogonal sum (Dempster's rule of combination)");
    comb->add_option("files", comb_opt.files, "two mass files over one frame")
        ->expected(0, 2);
    comb->add_option("--demo", comb_opt.demo,
                     "built-in first operand (soldiers)");
    comb->add_option("--rule", comb_opt.rule,
                     "dempster (normalized) or open (keep conflict)")
        ->check(CLI::IsMember({"dempster", "open"}));
    comb->add_option("--out", comb_opt.out, "write the combined mass file");
    comb->add_flag("--json", comb_opt.json_out, "machine-readable output");
    comb->callback([&] { exit_code = run_combine(comb_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ConflictError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
