#pragma once
// Input documents and report rendering.

#include <optional>
#include <string>

#include "numsys/compile.hpp"
#include "numsys/decide.hpp"
#include "numsys/slender.hpp"

namespace numsys {

// Malformed input; `path` locates the offending field ("$.initial[2]").
struct InputError : Error {
  InputError(std::string path_, const std::string& msg) : Error(path_ + ": " + msg), path(std::move(path_)) {}
  std::string path;
};

inline constexpr const char* kSystemFormat = "numsys-system/1";
inline constexpr const char* kReportFormat = "numsys-report/1";
inline constexpr const char* kMaxWordsFormat = "numsys-maxwords/1";

struct SystemSpec {
  PositionalSystem system;
  AnalysisBudgets budgets;
};

// {"format": "numsys-system/1", "name": ..., "recurrence": [c_{m-1}, ..., c_0], "initial": [U_0, ...],
//  "budgets": {"expansion_steps": ..., "max_height_bits": ..., "p_bound": ..., "fit_window": ...}}
// Integers may be JSON numbers or decimal strings.
SystemSpec parse_system(const std::string& text);
std::string system_to_json(const PositionalSystem& sys, const AnalysisBudgets& budgets);

// {"format": "numsys-maxwords/1", "finite": ["", "1", ...], "pieces": [{"x": .., "y": .., "z": ..}, ...]}
SlenderDecomposition parse_max_words(const std::string& text);
std::string max_words_to_json(const SlenderDecomposition& m);

// Midpoint rounded to `digits` decimals, with an explicit error bound.
std::string decimal(const FieldElement& x, unsigned digits);

std::string render_text(const AnalysisReport& report, unsigned digits = 12);
// Deterministic; parsing the output and dumping it again gives the same bytes.
std::string render_json(const AnalysisReport& report, unsigned digits = 12);

std::string read_file(const std::string& path);  // "-" reads stdin

}  // namespace numsys
