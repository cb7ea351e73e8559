#pragma once

// JSON model files:
//
//   {
//     "dimension": 2,
//     "vertices": [[0,0],[2,0],[1,1],[0,1]],
//     "pl_pieces": [[1,0,0],[0,0,1]],          // linear coefficients, then the constant
//     "tasks": {                                // optional
//       "chow_level": 1, "vertex": 0, "gammas": "16:32",
//       "search": {"bound": 1, "pieces": 2, "predicate": "nonpositive-nonproduct",
//                  "budget": 5000, "seed": 7}
//     }
//   }
//
// All entries are JSON integers. Rationals in reports are strings "p/q".

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "kstab/test_config.hpp"

namespace kstab {

struct SearchTask {
  std::optional<std::int64_t> bound;
  std::optional<int> pieces;
  std::optional<std::string> predicate;
  std::optional<std::int64_t> budget;
  std::optional<std::uint64_t> seed;
};

struct ModelTasks {
  std::optional<std::int64_t> chow_level;
  std::optional<std::size_t> vertex;
  std::optional<std::pair<std::int64_t, std::int64_t>> gammas;
  std::optional<SearchTask> search;
};

struct Model {
  ToricTestConfig config;
  ModelTasks tasks;
};

// Throws ParseError (malformed JSON or missing/mistyped field, with the field path) and
// ValidationError (integrality, degenerate polytope, dimension).
Model parse_model(std::string_view text);
Model load_model(const std::string& path);

// Canonical form: pruned vertices and pieces, no tasks.
std::string serialize(const ToricTestConfig& tc);

// "a:b" -> (a, b) with a <= b.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

}  // namespace kstab
