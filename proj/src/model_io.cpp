#include "kstab/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kstab/error.hpp"

namespace kstab {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, path + ": " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) parse_fail(path, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::int64_t integer_at(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number() || v.is_string())
    throw Error(ErrorCode::kValidationError, "integrality: " + path + " must be an integer, got " + v.dump());
  parse_fail(path, "expected integer, got " + std::string(v.type_name()));
}

std::vector<std::int64_t> integer_row(const json& v, const std::string& path, std::size_t expected) {
  if (!v.is_array()) parse_fail(path, "expected array");
  if (v.size() != expected)
    throw Error(ErrorCode::kValidationError, path + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(expected));
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer_at(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

ModelTasks parse_tasks(const json& t) {
  const std::string path = "$.tasks";
  if (!t.is_object()) parse_fail(path, "expected object");
  ModelTasks tasks;
  for (const auto& [key, value] : t.items()) {
    const std::string p = path + "." + key;
    if (key == "chow_level") {
      tasks.chow_level = integer_at(value, p);
      if (*tasks.chow_level < 1) throw Error(ErrorCode::kValidationError, p + " must be positive");
    } else if (key == "vertex") {
      const auto v = integer_at(value, p);
      if (v < 0) throw Error(ErrorCode::kValidationError, p + " must be nonnegative");
      tasks.vertex = static_cast<std::size_t>(v);
    } else if (key == "gammas") {
      if (!value.is_string()) parse_fail(p, "expected range string \"a:b\"");
      tasks.gammas = parse_range(value.get<std::string>());
    } else if (key == "search") {
      if (!value.is_object()) parse_fail(p, "expected object");
      SearchTask s;
      for (const auto& [sk, sv] : value.items()) {
        const std::string sp = p + "." + sk;
        if (sk == "bound") s.bound = integer_at(sv, sp);
        else if (sk == "pieces") s.pieces = static_cast<int>(integer_at(sv, sp));
        else if (sk == "budget") s.budget = integer_at(sv, sp);
        else if (sk == "seed") s.seed = static_cast<std::uint64_t>(integer_at(sv, sp));
        else if (sk == "predicate") {
          if (!sv.is_string()) parse_fail(sp, "expected string");
          s.predicate = sv.get<std::string>();
        } else {
          parse_fail(sp, "unknown field");
        }
      }
      tasks.search = s;
    } else {
      parse_fail(p, "unknown field");
    }
  }
  return tasks;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  auto parse = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::kParseError, "bad range '" + std::string(text) + "'");
    return v;
  };
  if (colon == std::string_view::npos) throw Error(ErrorCode::kParseError, "range '" + std::string(text) + "' needs the form a:b");
  const auto a = parse(text.substr(0, colon)), b = parse(text.substr(colon + 1));
  if (a > b) throw Error(ErrorCode::kValidationError, "empty range '" + std::string(text) + "'");
  return {a, b};
}

Model parse_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!root.is_object()) parse_fail("$", "expected object");
  for (const auto& [key, _] : root.items())
    if (key != "dimension" && key != "vertices" && key != "pl_pieces" && key != "tasks" && key != "name" &&
        key != "description")
      parse_fail("$." + key, "unknown field");

  const auto n = integer_at(member(root, "$", "dimension"), "$.dimension");
  if (n != 2 && n != 3)
    throw Error(ErrorCode::kValidationError, "DimensionUnsupported: dimension " + std::to_string(n) + " (supported: 2, 3)");
  const auto dim = static_cast<std::size_t>(n);

  const json& vj = member(root, "$", "vertices");
  if (!vj.is_array()) parse_fail("$.vertices", "expected array");
  std::vector<LatticeVector> vertices;
  for (std::size_t i = 0; i < vj.size(); ++i) {
    const auto row = integer_row(vj[i], "$.vertices[" + std::to_string(i) + "]", dim);
    vertices.emplace_back(std::span<const std::int64_t>(row));
  }

  const json& pj = member(root, "$", "pl_pieces");
  if (!pj.is_array()) parse_fail("$.pl_pieces", "expected array");
  if (pj.empty()) throw Error(ErrorCode::kValidationError, "$.pl_pieces is empty");
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const auto row = integer_row(pj[i], "$.pl_pieces[" + std::to_string(i) + "]", dim + 1);
    pieces.push_back({LatticeVector(std::span<const std::int64_t>(row.data(), dim)), row[dim]});
  }

  ModelTasks tasks;
  if (root.contains("tasks")) tasks = parse_tasks(root.at("tasks"));

  try {
    return {ToricTestConfig(build_polytope(std::move(vertices)), PLConvexFunction(std::move(pieces))), tasks};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kValidationError) throw;
    throw Error(ErrorCode::kValidationError, e.what());
  }
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string serialize(const ToricTestConfig& tc) {
  nlohmann::ordered_json j;
  j["dimension"] = tc.dim();
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : tc.polytope().vertices()) j["vertices"].push_back(std::vector<std::int64_t>(v.begin(), v.end()));
  j["pl_pieces"] = nlohmann::ordered_json::array();
  for (const auto& p : tc.function().pieces()) {
    std::vector<std::int64_t> row(p.linear.begin(), p.linear.end());
    row.push_back(p.constant);
    j["pl_pieces"].push_back(row);
  }
  return j.dump();
}

}  // namespace kstab
