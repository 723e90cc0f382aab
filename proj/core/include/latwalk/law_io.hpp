#pragma once

#include "latwalk/step_law.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace latwalk {

// Step-law file format (JSON, UTF-8):
//   {"denominator": D, "atoms": [{"dx": int, "dy": int, "weight": int}, ...]}
// Duplicate (dx, dy) entries are rejected. This is the single law source for
// the CLI and the tests.

/// Parses a law from JSON text. Throws MalformedLawFile naming the offending
/// field, or a validation error from StepLaw::validate.
StepLaw law_from_json_text(const std::string& text);

StepLaw load_law_file(const std::filesystem::path& path);

std::string law_to_json_text(const StepLaw& law);

void save_law_file(const std::filesystem::path& path, const StepLaw& law);

// Bundled example laws.
StepLaw simple_walk();    // uniform on the 4 unit steps, D = 4
StepLaw lazy_walk();      // {(0,0): 2, unit steps: 1 each}, D = 6
StepLaw long_step_walk(); // radius-2 symmetric mix, D = 12

/// name -> law for every bundled law, in emission order:
/// simple, lazy, diff_simple (= difference_law(simple_walk())), long_step.
std::vector<std::pair<std::string, StepLaw>> bundled_laws();

/// Writes <name>.json for each bundled law into dir (created if missing);
/// returns the file paths.
std::vector<std::filesystem::path> emit_law_bundle(const std::filesystem::path& dir);

} // namespace latwalk
