#pragma once

// The line-oriented command language:
//
//   set NAME = delta N | boundary N | horn N K
//            | product NAME NAME | sum NAME NAME
//            | quotient NAME by CELLS | sub NAME by CELLS
//            | union NAME NAME | nerve { a<b b<c ... } | load "FILE"
//   check regular NAME | check strongly-regular NAME | check P R NAME [cap C]
//   homdim (N | NAME) target NAME [cap C] | homcount N P target NAME
//   dump NAME | example tight N Q | example lurie Q A P | corpus SIZE
//
// CELLS is a ';'-separated list of vertex lists ("0 2; 0 1 2"). A list is
// matched against cell names first; a single number that names no cell is
// taken as a cell id. '#' starts a comment.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sset/delta.hpp"

namespace sset {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Position where, const std::string& message);
  Position where;
};

enum class SetKind { delta, boundary, horn, product, sum, quotient, sub, union_of, nerve, load };

struct SetExpr {
  SetKind kind;
  std::vector<Degree> numbers;
  std::vector<std::string> operands;
  std::vector<std::vector<Degree>> cells;
  std::vector<std::pair<std::string, std::string>> relations;
  std::string path;
};

struct Binding {
  std::string name;
  SetExpr expr;
};

enum class CommandKind {
  check_regular,
  check_strongly_regular,
  check_pr,
  homdim,
  homcount,
  dump,
  example_tight,
  example_lurie,
  corpus,
};

struct Command {
  CommandKind kind;
  std::vector<std::string> names;
  std::vector<Degree> numbers;
  std::optional<Degree> cap;
};

struct Statement {
  Position where;
  std::string text;
  std::variant<Binding, Command> body;
};

struct Script {
  std::vector<Statement> statements;
};

/// Throws ParseError on syntax errors, unknown names and rebinding.
Script parse_script(std::string_view text);

struct RunOptions {
  std::uint64_t seed = 0;
  /// Cap for commands that take one and omit it.
  std::optional<Degree> max_degree;
  bool dump_hom = false;
};

struct RunReport {
  /// One object per command, plus one per binding that failed to build.
  std::vector<nlohmann::ordered_json> results;
  bool ok = true;
};

RunReport run(const Script& script, const RunOptions& options = {});

/// Human-readable rendering of one result object.
std::string render_pretty(const nlohmann::ordered_json& result);

}  // namespace sset
