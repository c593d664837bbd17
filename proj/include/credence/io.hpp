#pragma once

// File formats and set-expression parsing.
//
// Mass files carry either explicit masses or a belief table:
//   {"frame": ["P1","P2"], "mode": "closed",
//    "masses": [{"set": ["P1"], "mass": "1/3"}, ...]}
//   {"frame": ["P1","P2"], "bel": [{"set": ["P1"], "value": "1/2"}, ...]}
// The belief-table form is converted through mass_from_bel at load time and
// rejected if it is not a belief function.  Writing always emits the mass
// form with canonical fractions.
//
// Source files:
//   {"X": ["S1",...], "p": ["1/3",...], "Y": ["P1",...],
//    "M": {"S1": ["P1","P2"], ...}}
//
// Scenario files:
//   {"outcomes": [...], "sources": [{"name":"S1","prob":"1/3",
//    "options":["P1","P2"]}, ...], "killed_worlds": ["w2"],
//    "killed_pairs": [["w4","S1"], ...]}

#include "credence/mass.hpp"
#include "credence/scenario.hpp"
#include "credence/source.hpp"

#include <filesystem>
#include <string>

namespace credence {

MassFunction load_mass(const std::filesystem::path& path);
void save_mass(const std::filesystem::path& path, const MassFunction& mass);

MultivaluedSource load_source(const std::filesystem::path& path);

Scenario load_scenario(const std::filesystem::path& path);

// Parses a subset literal like "{P1,P3}" against the frame.  Braces are
// required, whitespace is ignored, "{}" is the empty set.
SubsetMask parse_set_expression(const Frame& frame, const std::string& text);

} // namespace credence
