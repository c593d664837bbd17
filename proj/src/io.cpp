#include "credence/io.hpp"

#include "credence/errors.hpp"
#include "credence/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <vector>

namespace credence {
namespace {

using json = nlohmann::ordered_json;

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

const json& require_field(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError("missing field \"" + key + "\"");
    return obj.at(key);
}

std::vector<std::string> string_array(const json& value,
                                      const std::string& field) {
    if (!value.is_array())
        throw ValidationError(field + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string())
            throw ValidationError(field + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

// Numeric fields accept fraction/decimal strings and integer literals.
// Non-integer JSON numbers are rejected: a double like 0.1 is not the
// rational 1/10, and silently keeping the nearest double would corrupt
// exact values.  Write "0.1" (quoted) instead.
Rational rational_field(const json& value, const std::string& field) {
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(value.get<long long>());
    if (value.is_number())
        throw ValidationError(field +
                              ": non-integer numbers lose exactness; quote "
                              "the value as a string like \"1/3\" or \"0.1\"");
    throw ValidationError(field + " must be a string or integer");
}

SubsetMask subset_field(const Frame& frame, const json& value,
                        const std::string& field) {
    try {
        return frame.subset(string_array(value, field));
    } catch (const ValidationError& e) {
        throw ValidationError(field + ": " + e.what());
    }
}

WorldMode mode_field(const json& obj) {
    if (!obj.contains("mode")) return WorldMode::Closed;
    const json& value = obj.at("mode");
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        if (text == "closed") return WorldMode::Closed;
        if (text == "open") return WorldMode::Open;
    }
    throw ValidationError("mode must be \"closed\" or \"open\"");
}

MassFunction mass_from_bel_entries(const Frame& frame, WorldMode mode,
                                   const json& entries) {
    if (!entries.is_array())
        throw ValidationError("bel must be an array");
    const std::size_t table_size = std::size_t{1} << frame.size();
    std::vector<Rational> values(table_size, Rational(-1));
    values[0] = 0; // bel(∅) may be omitted; it can only be 0
    std::size_t index = 0;
    for (const auto& entry : entries) {
        const std::string field = "bel[" + std::to_string(index++) + "]";
        const SubsetMask set =
            subset_field(frame, require_field(entry, "set"), field + ".set");
        Rational value =
            rational_field(require_field(entry, "value"), field + ".value");
        if (set.count() == 0 && value != 0)
            throw ValidationError(field + ": bel of the empty set must be 0");
        auto& slot = values[set.bits()];
        if (set.count() > 0 && slot >= 0)
            throw ValidationError(field + ": duplicate set " +
                                  frame.format_subset(set));
        slot = std::move(value);
    }
    for (std::size_t bits = 1; bits < table_size; ++bits)
        if (values[bits] < 0)
            throw ValidationError(
                "bel: missing value for " +
                frame.format_subset(SubsetMask::of_bits(frame.size(),
                                                        std::uint32_t(bits))));
    return mass_from_bel(BeliefTable{frame, mode, std::move(values)});
}

} // namespace

MassFunction load_mass(const std::filesystem::path& path) {
    const json doc = read_json_file(path);
    const Frame frame(string_array(require_field(doc, "frame"), "frame"));
    const WorldMode mode = mode_field(doc);

    if (doc.contains("bel")) {
        if (doc.contains("masses"))
            throw ValidationError(
                "give either \"masses\" or \"bel\", not both");
        return mass_from_bel_entries(frame, mode, doc.at("bel"));
    }

    const json& entries = require_field(doc, "masses");
    if (!entries.is_array())
        throw ValidationError("masses must be an array");
    std::map<SubsetMask, Rational> assignments;
    std::size_t index = 0;
    for (const auto& entry : entries) {
        const std::string field = "masses[" + std::to_string(index++) + "]";
        const SubsetMask set =
            subset_field(frame, require_field(entry, "set"), field + ".set");
        Rational value =
            rational_field(require_field(entry, "mass"), field + ".mass");
        if (assignments.contains(set))
            throw ValidationError(field + ": duplicate set " +
                                  frame.format_subset(set));
        assignments[set] = std::move(value);
    }
    return {frame, std::move(assignments), mode};
}

void save_mass(const std::filesystem::path& path, const MassFunction& mass) {
    json doc;
    doc["frame"] = mass.frame().labels();
    doc["mode"] = mass.mode() == WorldMode::Open ? "open" : "closed";
    json entries = json::array();
    for (const auto& [set, value] : mass.focal()) {
        json entry;
        json labels = json::array();
        for (int i : set.elements()) labels.push_back(mass.frame().label(i));
        entry["set"] = std::move(labels);
        entry["mass"] = to_fraction(value);
        entries.push_back(std::move(entry));
    }
    doc["masses"] = std::move(entries);

    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

MultivaluedSource load_source(const std::filesystem::path& path) {
    const json doc = read_json_file(path);
    std::vector<std::string> labels =
        string_array(require_field(doc, "X"), "X");
    const json& probs = require_field(doc, "p");
    if (!probs.is_array())
        throw ValidationError("p must be an array");
    std::vector<Rational> probabilities;
    std::size_t index = 0;
    for (const auto& value : probs)
        probabilities.push_back(
            rational_field(value, "p[" + std::to_string(index++) + "]"));

    const Frame target(string_array(require_field(doc, "Y"), "Y"));
    const json& mapping = require_field(doc, "M");
    if (!mapping.is_object())
        throw ValidationError("M must be an object keyed by X labels");
    for (const auto& [key, unused] : mapping.items())
        if (std::find(labels.begin(), labels.end(), key) == labels.end())
            throw ValidationError("M: unknown label " + key);
    std::vector<SubsetMask> images;
    for (const auto& label : labels) {
        if (!mapping.contains(label))
            throw ValidationError("M: missing image for " + label);
        images.push_back(
            subset_field(target, mapping.at(label), "M." + label));
    }
    return {std::move(labels), std::move(probabilities), target,
            std::move(images)};
}

Scenario load_scenario(const std::filesystem::path& path) {
    const json doc = read_json_file(path);
    const std::vector<std::string> outcomes =
        string_array(require_field(doc, "outcomes"), "outcomes");

    const json& source_list = require_field(doc, "sources");
    if (!source_list.is_array())
        throw ValidationError("sources must be an array");
    std::vector<SourceSpec> sources;
    std::size_t index = 0;
    for (const auto& entry : source_list) {
        const std::string field = "sources[" + std::to_string(index++) + "]";
        SourceSpec spec;
        const json& name = require_field(entry, "name");
        if (!name.is_string())
            throw ValidationError(field + ".name must be a string");
        spec.name = name.get<std::string>();
        spec.selection_probability =
            rational_field(require_field(entry, "prob"), field + ".prob");
        spec.options =
            string_array(require_field(entry, "options"), field + ".options");
        sources.push_back(std::move(spec));
    }

    Scenario scenario = Scenario::build(outcomes, std::move(sources));

    if (doc.contains("killed_worlds")) {
        const auto worlds =
            string_array(doc.at("killed_worlds"), "killed_worlds");
        if (!worlds.empty()) scenario = scenario.kill_worlds(worlds);
    }
    if (doc.contains("killed_pairs")) {
        const json& pairs = doc.at("killed_pairs");
        if (!pairs.is_array())
            throw ValidationError("killed_pairs must be an array of "
                                  "[world, source] pairs");
        std::vector<std::pair<std::string, std::string>> parsed;
        for (const auto& pair : pairs) {
            if (!pair.is_array() || pair.size() != 2 ||
                !pair[0].is_string() || !pair[1].is_string())
                throw ValidationError("killed_pairs entries must be "
                                      "[world, source] string pairs");
            parsed.emplace_back(pair[0].get<std::string>(),
                                pair[1].get<std::string>());
        }
        if (!parsed.empty()) scenario = scenario.kill_pairs(parsed);
    }
    return scenario;
}

SubsetMask parse_set_expression(const Frame& frame, const std::string& text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}')
        throw ValidationError("set expression must look like {P1,P3}: " +
                              text);
    const std::string body = compact.substr(1, compact.size() - 2);
    SubsetMask result = SubsetMask::empty(frame.size());
    if (body.empty()) return result;

    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        const std::string label = body.substr(start, comma - start);
        if (label.empty())
            throw ValidationError("empty label in set expression: " + text);
        result = result | SubsetMask::singleton(frame.size(),
                                                frame.index_of(label));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return result;
}

} // namespace credence
