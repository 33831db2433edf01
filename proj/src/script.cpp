#include "sset/script.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "sset/exhibits.hpp"
#include "sset/hom.hpp"
#include "sset/regularity.hpp"
#include "sset/serialize.hpp"
#include "sset/simplicial_set.hpp"

namespace sset {

ParseError::ParseError(Position w, const std::string& message)
    : std::runtime_error("line " + std::to_string(w.line) + ", column " + std::to_string(w.column) +
                         ": " + message),
      where(w) {}

namespace {

// ---------------------------------------------------------------------------
// Lexing

enum class TokenKind { word, number, symbol, string };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

bool is_symbol(char c) { return c == '=' || c == ';' || c == '{' || c == '}' || c == '<'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#')
      break;
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (is_symbol(c)) {
      out.push_back({TokenKind::symbol, std::string(1, c), col});
      ++i;
      continue;
    }
    if (c == '"') {
      const std::size_t end = line.find('"', i + 1);
      if (end == std::string_view::npos)
        throw ParseError({line_no, col}, "unterminated string");
      out.push_back({TokenKind::string, std::string(line.substr(i + 1, end - i - 1)), col});
      i = end + 1;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && !is_symbol(line[j]) && line[j] != '#' &&
           line[j] != '"')
      ++j;
    std::string text(line.substr(i, j - i));
    const bool digits = text.find_first_not_of("0123456789") == std::string::npos;
    out.push_back({digits ? TokenKind::number : TokenKind::word, std::move(text), col});
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_length,
             std::map<std::string, Position>& bound)
      : toks_(std::move(tokens)), line_(line_no), eol_(line_length + 1), bound_(bound) {}

  std::variant<Binding, Command> statement() {
    const Token& head = expect_word("a statement");
    std::variant<Binding, Command> result = Command{};
    if (head.text == "set")
      result = binding();
    else if (head.text == "check")
      result = check();
    else if (head.text == "homdim")
      result = homdim();
    else if (head.text == "homcount")
      result = homcount();
    else if (head.text == "dump")
      result = Command{CommandKind::dump, {bound_name()}, {}, {}};
    else if (head.text == "example")
      result = example();
    else if (head.text == "corpus")
      result = Command{CommandKind::corpus, {}, {number()}, {}};
    else
      fail(head, "unknown statement '" + head.text + "'");
    if (pos_ < toks_.size())
      fail(toks_[pos_], "unexpected '" + toks_[pos_].text + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError({line_, t.column}, msg);
  }
  [[noreturn]] void fail_at_end(const std::string& msg) const {
    throw ParseError({line_, eol_}, msg);
  }

  const Token& next(const std::string& what) {
    if (pos_ >= toks_.size())
      fail_at_end("expected " + what);
    return toks_[pos_++];
  }
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token* peek() const { return at_end() ? nullptr : &toks_[pos_]; }

  const Token& expect_word(const std::string& what) {
    const Token& t = next(what);
    if (t.kind != TokenKind::word)
      fail(t, "expected " + what);
    return t;
  }
  void keyword(const std::string& kw) {
    const Token& t = next("'" + kw + "'");
    if (t.text != kw)
      fail(t, "expected '" + kw + "'");
  }
  void symbol(char c) {
    const Token& t = next(std::string("'") + c + "'");
    if (t.kind != TokenKind::symbol || t.text[0] != c)
      fail(t, std::string("expected '") + c + "'");
  }
  Degree number() {
    const Token& t = next("a number");
    if (t.kind != TokenKind::number)
      fail(t, "expected a number");
    Degree v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      fail(t, "number out of range");
    return v;
  }
  std::string bound_name() {
    const Token& t = expect_word("a set name");
    if (!bound_.count(t.text))
      fail(t, "unknown name '" + t.text + "'");
    return t.text;
  }
  std::optional<Degree> optional_cap() {
    if (const Token* t = peek(); t && t->text == "cap") {
      ++pos_;
      return number();
    }
    return std::nullopt;
  }

  std::vector<std::vector<Degree>> cell_list() {
    std::vector<std::vector<Degree>> cells(1);
    if (at_end())
      fail_at_end("malformed cell list: expected a vertex list");
    while (!at_end()) {
      const Token& t = toks_[pos_];
      if (t.kind == TokenKind::symbol && t.text == ";") {
        if (cells.back().empty())
          fail(t, "malformed cell list: empty vertex list");
        cells.emplace_back();
        ++pos_;
        continue;
      }
      if (t.kind != TokenKind::number)
        fail(t, "malformed cell list: unexpected '" + t.text + "'");
      cells.back().push_back(number());
    }
    if (cells.back().empty())
      fail_at_end("malformed cell list: empty vertex list");
    return cells;
  }

  Binding binding() {
    const Token& name = expect_word("a set name");
    if (const auto it = bound_.find(name.text); it != bound_.end())
      fail(name, "'" + name.text + "' is already bound on line " + std::to_string(it->second.line));
    symbol('=');
    const Token& kind = expect_word("a set expression");
    SetExpr e{};
    const std::string& k = kind.text;
    if (k == "delta") {
      e.kind = SetKind::delta;
      e.numbers = {number()};
    } else if (k == "boundary") {
      e.kind = SetKind::boundary;
      e.numbers = {number()};
    } else if (k == "horn") {
      e.kind = SetKind::horn;
      e.numbers = {number(), number()};
    } else if (k == "product" || k == "sum" || k == "union") {
      e.kind = k == "product" ? SetKind::product : k == "sum" ? SetKind::sum : SetKind::union_of;
      e.operands = {bound_name(), bound_name()};
    } else if (k == "quotient" || k == "sub") {
      e.kind = k == "quotient" ? SetKind::quotient : SetKind::sub;
      e.operands = {bound_name()};
      keyword("by");
      e.cells = cell_list();
    } else if (k == "nerve") {
      e.kind = SetKind::nerve;
      nerve_body(e);
    } else if (k == "load") {
      e.kind = SetKind::load;
      const Token& t = next("a quoted file name");
      if (t.kind != TokenKind::string)
        fail(t, "expected a quoted file name");
      e.path = t.text;
    } else {
      fail(kind, "unknown set expression '" + k + "'");
    }
    bound_.emplace(name.text, Position{line_, name.column});
    return {name.text, std::move(e)};
  }

  void nerve_body(SetExpr& e) {
    symbol('{');
    auto element = [&]() -> std::string {
      const Token& t = next("a poset element");
      if (t.kind != TokenKind::word && t.kind != TokenKind::number)
        fail(t, "expected a poset element");
      if (std::find(e.operands.begin(), e.operands.end(), t.text) == e.operands.end())
        e.operands.push_back(t.text);
      return t.text;
    };
    while (true) {
      const Token* t = peek();
      if (!t)
        fail_at_end("expected '}'");
      if (t->kind == TokenKind::symbol && t->text == "}") {
        ++pos_;
        return;
      }
      std::string lo = element();
      while (const Token* s = peek()) {
        if (s->kind != TokenKind::symbol || s->text != "<")
          break;
        ++pos_;
        std::string hi = element();
        e.relations.emplace_back(lo, hi);
        lo = std::move(hi);
      }
    }
  }

  Command check() {
    const Token& what = expect_word("regular, strongly-regular or P");
    if (what.text == "regular")
      return {CommandKind::check_regular, {bound_name()}, {}, {}};
    if (what.text == "strongly-regular")
      return {CommandKind::check_strongly_regular, {bound_name()}, {}, {}};
    if (what.text == "P") {
      const Degree r = number();
      std::string name = bound_name();
      return {CommandKind::check_pr, {std::move(name)}, {r}, optional_cap()};
    }
    fail(what, "unknown check '" + what.text + "'");
  }

  Command homdim() {
    Command c{CommandKind::homdim, {}, {}, {}};
    const Token* src = peek();
    if (src && src->kind == TokenKind::number)
      c.numbers = {number()};
    else
      c.names.push_back(bound_name());
    keyword("target");
    c.names.push_back(bound_name());
    c.cap = optional_cap();
    return c;
  }

  Command homcount() {
    const Degree n = number();
    const Degree p = number();
    keyword("target");
    return {CommandKind::homcount, {bound_name()}, {n, p}, {}};
  }

  Command example() {
    const Token& what = expect_word("tight or lurie");
    if (what.text == "tight") {
      const Degree n = number();
      return {CommandKind::example_tight, {}, {n, number()}, {}};
    }
    if (what.text == "lurie") {
      const Degree q = number();
      const Degree a = number();
      return {CommandKind::example_lurie, {}, {q, a, number()}, {}};
    }
    fail(what, "unknown example '" + what.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t eol_;
  std::map<std::string, Position>& bound_;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  std::map<std::string, Position> bound;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    auto tokens = tokenize(line, line_no);
    if (!tokens.empty()) {
      const Position where{line_no, tokens.front().column};
      std::string source = trim(line.substr(0, line.find('#')));
      LineParser parser(std::move(tokens), line_no, line.size(), bound);
      script.statements.push_back({where, std::move(source), parser.statement()});
    }
    start = end + 1;
  }
  return script;
}

// ---------------------------------------------------------------------------
// Running

namespace {

using json = nlohmann::ordered_json;

struct Value {
  SimplicialSet set;
  std::optional<Degree> simplex_dim;  // bound as delta N
  std::string ambient;                // for sub: the set it was cut from
  std::shared_ptr<Subcomplex> part;
};

class Interpreter {
 public:
  explicit Interpreter(const RunOptions& opts) : opts_(opts) {}

  RunReport run(const Script& script) {
    RunReport report;
    for (const Statement& st : script.statements) {
      const auto t0 = std::chrono::steady_clock::now();
      json out;
      bool failed = false;
      try {
        if (const auto* b = std::get_if<Binding>(&st.body)) {
          bind(*b);
          continue;
        }
        out = command(std::get<Command>(st.body));
      } catch (const std::exception& e) {
        failed = true;
        out = json::object();
        out["error"] = e.what();
        if (const auto* b = std::get_if<Binding>(&st.body))
          failed_.emplace(b->name, e.what());
      }
      json full = {{"command", st.text}, {"line", st.where.line}};
      full.update(out);
      full["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
      report.ok = report.ok && !failed;
      report.results.push_back(std::move(full));
    }
    return report;
  }

 private:
  const Value& lookup(const std::string& name) const {
    if (const auto it = values_.find(name); it != values_.end())
      return it->second;
    const auto f = failed_.find(name);
    throw std::runtime_error("'" + name + "' was not built: " +
                             (f != failed_.end() ? f->second : std::string("unknown name")));
  }

  static std::vector<CellId> resolve(const SimplicialSet& X, const std::string& set_name,
                                     const std::vector<std::vector<Degree>>& lists) {
    std::vector<CellId> ids;
    for (const auto& l : lists) {
      std::string name;
      for (Degree v : l)
        name += (name.empty() ? "" : " ") + std::to_string(v);
      if (const auto c = X.find(name)) {
        ids.push_back(*c);
      } else if (l.size() == 1 && l[0] < X.size()) {
        ids.push_back(l[0]);
      } else {
        throw std::invalid_argument("'" + set_name + "' has no cell '" + name + "'");
      }
    }
    return ids;
  }

  void bind(const Binding& b) {
    const SetExpr& e = b.expr;
    Value v;
    switch (e.kind) {
      case SetKind::delta:
        v.set = delta(e.numbers[0]);
        v.simplex_dim = e.numbers[0];
        break;
      case SetKind::boundary:
        v.set = boundary_delta(e.numbers[0]);
        break;
      case SetKind::horn:
        v.set = horn(e.numbers[0], e.numbers[1]);
        break;
      case SetKind::product:
        v.set = product(lookup(e.operands[0]).set, lookup(e.operands[1]).set);
        break;
      case SetKind::sum:
        v.set = disjoint_sum(lookup(e.operands[0]).set, lookup(e.operands[1]).set);
        break;
      case SetKind::quotient: {
        const SimplicialSet& X = lookup(e.operands[0]).set;
        const auto ids = resolve(X, e.operands[0], e.cells);
        v.set = quotient(X, Subcomplex::closure(X, ids));
        break;
      }
      case SetKind::sub: {
        const SimplicialSet& X = lookup(e.operands[0]).set;
        const auto ids = resolve(X, e.operands[0], e.cells);
        v.part = std::make_shared<Subcomplex>(Subcomplex::closure(X, ids));
        v.ambient = e.operands[0];
        v.set = restrict_to(X, *v.part);
        break;
      }
      case SetKind::union_of: {
        const Value& a = lookup(e.operands[0]);
        const Value& c = lookup(e.operands[1]);
        if (!a.part || !c.part || a.ambient != c.ambient)
          throw std::invalid_argument("union needs two subcomplexes of one set");
        const std::vector<Subcomplex> parts{*a.part, *c.part};
        v.part = std::make_shared<Subcomplex>(Subcomplex::unite(parts));
        v.ambient = a.ambient;
        v.set = restrict_to(lookup(a.ambient).set, *v.part);
        break;
      }
      case SetKind::nerve: {
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        auto idx = [&](const std::string& s) {
          return static_cast<std::size_t>(
              std::find(e.operands.begin(), e.operands.end(), s) - e.operands.begin());
        };
        for (const auto& [lo, hi] : e.relations)
          rel.emplace_back(idx(lo), idx(hi));
        v.set = nerve_poset(Poset::generated_by(e.operands, rel));
        break;
      }
      case SetKind::load: {
        std::ifstream in(e.path);
        if (!in)
          throw std::runtime_error("cannot open '" + e.path + "'");
        v.set = from_json(nlohmann::json::parse(in));
        break;
      }
    }
    values_.insert_or_assign(b.name, std::move(v));
  }

  static json witness_json(const SimplicialSet& X, const RegularityReport& r, const char* index_kind) {
    const Violation& w = *r.witness;
    json j = {{"cell", w.cell}, {"cell_name", X.cell(w.cell).name}, {index_kind, w.index}};
    if (w.simplex)
      j["simplex"] = w.simplex->to_string();
    return j;
  }

  std::optional<Degree> cap_for(const Command& c) const { return c.cap ? c.cap : opts_.max_degree; }

  json command(const Command& c) {
    switch (c.kind) {
      case CommandKind::check_regular: {
        const SimplicialSet& X = lookup(c.names[0]).set;
        const RegularityReport r = is_regular(X);
        json out = {{"inputs", {{"set", c.names[0]}}}, {"verdict", r.verdict}};
        if (r.witness)
          out["witness"] = witness_json(X, r, "edge");
        return out;
      }
      case CommandKind::check_strongly_regular: {
        const SimplicialSet& X = lookup(c.names[0]).set;
        const RegularityReport r = is_strongly_regular(X);
        json out = {{"inputs", {{"set", c.names[0]}}}, {"verdict", r.verdict}};
        if (r.witness)
          out["witness"] = witness_json(X, r, "face");
        return out;
      }
      case CommandKind::check_pr: {
        const SimplicialSet& X = lookup(c.names[0]).set;
        const Degree r = c.numbers[0];
        const Degree cap = cap_for(c).value_or(default_pr_cap(X, r));
        const RegularityReport rep = satisfies_pr(X, r, cap);
        json out = {{"inputs", {{"set", c.names[0]}, {"r", r}, {"cap", cap}}},
                    {"verdict", rep.verdict}};
        if (rep.witness)
          out["witness"] = witness_json(X, rep, "index");
        return out;
      }
      case CommandKind::homdim:
        return homdim(c);
      case CommandKind::homcount:
        return homcount(c);
      case CommandKind::dump:
        return {{"inputs", {{"set", c.names[0]}}}, {"value", to_json(lookup(c.names[0]).set)}};
      case CommandKind::example_tight: {
        const Degree n = c.numbers[0], q = c.numbers[1];
        const LatticeFunction f = tight_simplex(n, q);
        const SimplicialSet D = delta(q);
        const HomSimplex h = to_hom_simplex(D, f);
        json cols = json::array(), sums = json::array();
        for (Degree i = 0; i <= f.p; ++i) {
          cols.push_back(f.column(i));
          sums.push_back(f.column_sum(i));
        }
        return {{"inputs", {{"n", n}, {"q", q}}},
                {"value", f.p},
                {"columns", std::move(cols)},
                {"column_sums", std::move(sums)},
                {"verdict", !is_degenerate_hom(D, h)}};
      }
      case CommandKind::example_lurie: {
        const Degree q = c.numbers[0], a = c.numbers[1], p = c.numbers[2];
        const LurieFamily L = lurie_family(q, a, facets_opposite(q, {a, a + 1}), p);
        json z = json::array();
        for (const MonotoneMap& m : L.z)
          z.push_back(m.values());
        return {{"inputs", {{"q", q}, {"a", a}, {"p", p}}},
                {"value", p},
                {"z", std::move(z)},
                {"compatible", is_compatible(L.quotient, L.simplex)},
                {"verdict", !is_degenerate_hom(L.quotient, L.simplex)}};
      }
      case CommandKind::corpus: {
        json members = json::array();
        for (const CorpusEntry& e : corpus(opts_.seed, c.numbers[0])) {
          const char* known = e.known == KnownRegularity::regular       ? "regular"
                              : e.known == KnownRegularity::not_regular ? "not regular"
                                                                        : "unknown";
          members.push_back({{"name", e.name},
                             {"cells", e.set.size()},
                             {"dimension", e.set.dimension()},
                             {"known", known},
                             {"regular", is_regular(e.set).verdict}});
        }
        return {{"inputs", {{"size", c.numbers[0]}, {"seed", opts_.seed}}},
                {"value", members.size()},
                {"members", std::move(members)}};
      }
    }
    throw std::logic_error("unhandled command");
  }

  static json dimension_json(const HomDimension& d) {
    if (d.exact)
      return d.value;
    return d.to_string();
  }

  json homdim(const Command& c) {
    const std::string& target = c.names.back();
    const SimplicialSet& X = lookup(target).set;
    const std::optional<Degree> cap = cap_for(c);
    json inputs = {{"target", target}};
    if (cap)
      inputs["cap"] = *cap;
    std::optional<Degree> n;
    if (!c.numbers.empty())
      n = c.numbers[0];
    else if (lookup(c.names[0]).simplex_dim)
      n = lookup(c.names[0]).simplex_dim;
    if (n) {
      inputs["n"] = *n;
      const HomDimension d = dim_hom(X, *n, cap);
      return {{"inputs", std::move(inputs)}, {"value", dimension_json(d)}, {"exact", d.exact}};
    }
    const SimplicialSet& U = lookup(c.names[0]).set;
    inputs["source"] = c.names[0];
    if (is_regular(X).verdict) {
      // Hom(U, X) is then regular of dimension at most the bound, so the upward
      // scan meets a gap no later than bound + 1.
      const auto bound = static_cast<Degree>(theorem1bis_bound(U, X));
      const Degree limit = cap ? std::min(*cap, bound + 1) : bound + 1;
      const HomDimension d = hom_general_dimension(U, X, limit, true);
      return {{"inputs", std::move(inputs)}, {"value", dimension_json(d)}, {"exact", d.exact},
              {"bound", bound}};
    }
    if (!cap)
      throw CapRequired("Hom into a non-regular set needs a degree cap");
    const HomDimension d = hom_general_dimension(U, X, *cap, false);
    return {{"inputs", std::move(inputs)}, {"value", dimension_json(d)}, {"exact", d.exact}};
  }

  json homcount(const Command& c) {
    const SimplicialSet& X = lookup(c.names[0]).set;
    const Degree n = c.numbers[0], p = c.numbers[1];
    const bool regular = is_regular(X).verdict;
    json counts = json::array();
    json dumped = json::array();
    std::uint64_t total_at_p = 0;
    for (Degree d = 0; d <= p; ++d) {
      std::uint64_t total = 0, nondeg = 0;
      for_each_hom_simplex(X, n, d, [&](const HomSimplex& f) {
        ++total;
        const bool degenerate = d > 0 && is_degenerate_checked(X, f, regular);
        if (!degenerate)
          ++nondeg;
        if (opts_.dump_hom && d == p) {
          json a = json::array();
          for (const FormalSimplex& s : f.assignment)
            a.push_back(json(to_json(s)));
          dumped.push_back({{"assignment", std::move(a)}, {"degenerate", degenerate}});
        }
        return true;
      });
      counts.push_back({{"degree", d}, {"total", total}, {"nondegenerate", nondeg}});
      total_at_p = total;
    }
    json out = {{"inputs", {{"n", n}, {"p", p}, {"target", c.names[0]}}},
                {"value", total_at_p},
                {"counts", std::move(counts)}};
    if (opts_.dump_hom) {
      json paths = json::array();
      for (const LatticePath& a : path_catalog(p, n).paths())
        paths.push_back(a.word());
      out["paths"] = std::move(paths);
      out["simplices"] = std::move(dumped);
    }
    return out;
  }

  const RunOptions& opts_;
  std::map<std::string, Value> values_;
  std::map<std::string, std::string> failed_;
};

void render(std::ostringstream& os, const json& v, const std::string& indent) {
  for (const auto& [key, val] : v.items()) {
    if (val.is_object()) {
      os << indent << key << ":\n";
      render(os, val, indent + "  ");
    } else if (val.is_array() && !val.empty() && val.front().is_object()) {
      os << indent << key << ":\n";
      for (const json& row : val) {
        std::string line;
        for (const auto& [k, x] : row.items())
          line += (line.empty() ? "" : "  ") + k + "=" + (x.is_string() ? x.get<std::string>() : x.dump());
        os << indent << "  " << line << "\n";
      }
    } else {
      os << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
  }
}

}  // namespace

RunReport run(const Script& script, const RunOptions& options) {
  return Interpreter(options).run(script);
}

std::string render_pretty(const json& result) {
  std::ostringstream os;
  os << "== " << result.value("command", std::string()) << "\n";
  json rest = result;
  rest.erase("command");
  render(os, rest, "   ");
  return os.str();
}

}  // namespace sset
