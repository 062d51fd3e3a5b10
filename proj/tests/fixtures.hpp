#pragma once
// Systems shared by the test binaries.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "numsys/compile.hpp"
#include "numsys/decide.hpp"

namespace fixtures {

using numsys::Integer;
using numsys::PositionalSystem;

struct Fixture {
  const char* name;
  std::vector<long> recurrence;  // c_{m-1}, ..., c_0
  std::vector<long> initial;
  const char* verdict;  // expected overall verdict at default budgets
};

inline PositionalSystem make(const std::vector<long>& rec, const std::vector<long>& init, const std::string& name = {}) {
  std::vector<Integer> r, i;
  for (long v : rec) r.emplace_back(v);
  for (long v : init) i.emplace_back(v);
  return PositionalSystem(r, i, name);
}

// Name, recurrence, initial terms, verdict.
inline const std::vector<Fixture>& all() {
  static const std::vector<Fixture> list = {
      {"two_piece_max_words", {0, 8, 0, -10, 0, 2, 0, 0, 0}, {1, 2, 4, 6, 17, 44, 116, 286, 760}, "REGULAR"},
      {"beta_one", {1, 1, -1}, {1, 2, 4}, "REGULAR"},
      {"squares", {3, -3, 1}, {1, 4, 9}, "NOT_REGULAR"},
      {"three_and_one_regular", {4, -3}, {1, 4}, "REGULAR"},
      {"three_and_one_irregular", {4, -3}, {1, 2}, "NOT_REGULAR"},
      {"loop_with_tail",
       {0, 0, 23, 0, 0, 5, 0, 0, -46, 0, 0, -7, 0, 0, 23, 0, 0, 3},
       {1, 4, 9, 20, 70, 175, 489, 1641, 4015, 11294, 37898, 92748, 261291, 876620, 2145176, 6043562, 20275863,
        49617086},
       "NOT_REGULAR"},
      {"chain_to_infinite",
       {-1, -1, 22, 22, 22, 13, 13, 13, -10, -10, -10, 0, 0},
       {1, 4, 8, 22, 71, 185, 476, 1614, 4179, 10740, 36396, 94271, 242238},
       "REGULAR"},
      {"double_unit_roots",
       {0, 4, 0, 0, 0, 0, 0, 0, 0, 2, 0, -8, 0, 0, 0, 0, 0, 0, 0, -1, 0, 4},
       {1, 3, 5, 15, 21, 63, 85, 255, 341, 1023, 1365, 4090, 5456, 16368, 21825, 65475, 87301, 261903, 349205,
        1047615, 1396821, 4190453},
       "REGULAR"},
      {"sqrt13_pair", {0, 3, 0, 1}, {1, 2, 5, 7}, "REGULAR"},
      {"five_vertices", {0, 0, 0, 0, 16, 0, 0, 0, 0, -9}, {1, 2, 3, 6, 10, 19, 29, 48, 96, 151}, "REGULAR"},
      {"rational_period_four", {2, -4, 8}, {1, 3, 8}, "REGULAR"},
      {"n_three_to_n", {7, -15, 9}, {1, 4, 19}, "NOT_REGULAR"},
      {"octic_regular", {0, 2, 0, 2, 0, 0, 0, 2}, {1, 2, 4, 6, 12, 17, 34, 47}, "REGULAR"},
      {"octic_fibonacci_start", {0, 2, 0, 2, 0, 0, 0, 2}, {1, 2, 3, 5, 8, 13, 21, 34}, "UNKNOWN"},
      {"tail_pair_a", {0, 9, 0, -11, 0, 3}, {1, 2, 7, 16, 49, 122}, "NOT_REGULAR"},
      {"tail_pair_b", {0, 9, 0, -11, 0, 3}, {1, 2, 6, 14, 42, 105}, "NOT_REGULAR"},
      {"cubic_period", {0, 0, 9, 0, 0, -9}, {1, 2, 3, 9, 15, 24}, "REGULAR"},
      {"sqrt2_pair", {0, 2, 0, 0, 0, -1}, {1, 3, 4, 6, 9, 11}, "REGULAR"},
      {"period_four_cycle", {0, 2, 0, 3}, {1, 3, 6, 11}, "REGULAR"},
      {"zeckendorf", {1, 1}, {1, 2}, "REGULAR"},
      {"two_one_forever", {3, -1}, {1, 3}, "REGULAR"},
      {"base_two", {2}, {1}, "REGULAR"},
      {"base_ten", {10}, {1}, "REGULAR"},
  };
  return list;
}

inline const Fixture& get(const std::string& name) {
  for (const auto& f : all())
    if (name == f.name) return f;
  throw std::out_of_range("no fixture " + name);
}

inline PositionalSystem system(const std::string& name) {
  const Fixture& f = get(name);
  return make(f.recurrence, f.initial, f.name);
}

// Analyses are shared within one test binary.
inline const numsys::AnalysisReport& report(const std::string& name) {
  static std::map<std::string, std::unique_ptr<numsys::AnalysisReport>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    numsys::AnalysisBudgets b;
    b.exhaustive = true;
    it = cache.emplace(name, std::make_unique<numsys::AnalysisReport>(numsys::analyze(system(name), b))).first;
  }
  return *it->second;
}

}  // namespace fixtures
