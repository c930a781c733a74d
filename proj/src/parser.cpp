#include "pengu/parser.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "pengu/error.hpp"

namespace pengu {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::BadProbability: return "BadProbability";
    case ParseErrorKind::DuplicateAxiom: return "DuplicateAxiom";
    case ParseErrorKind::BadName: return "BadName";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, std::string message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Recursive-descent reader over a single line.
class LineReader {
 public:
  LineReader(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(ParseErrorKind kind, const std::string& what) const {
    throw ParseError(kind, line_, column(), what);
  }

  void expect(char c) {
    if (peek() != c) {
      std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of line";
      fail(ParseErrorKind::Syntax, std::string("expected '") + c + "' but found " +
                                       (found == "end of line" ? found : "'" + found + "'"));
    }
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) fail(ParseErrorKind::Syntax, "unexpected trailing input");
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, "expected a name");
    if (!is_name_start(text_[pos_])) {
      if (is_name_char(text_[pos_]) || text_[pos_] == '$') {
        fail(ParseErrorKind::BadName, "names must match [A-Za-z_][A-Za-z0-9_]*");
      }
      fail(ParseErrorKind::Syntax, "expected a name");
    }
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// A name immediately followed (modulo spaces) by '(' is a constructor.
  bool next_is_call() {
    std::size_t save = pos_;
    skip_ws();
    bool call = pos_ < text_.size() && text_[pos_] == '(';
    pos_ = save;
    return call;
  }

  Concept concept_expr() {
    skip_ws();
    std::size_t start = pos_;
    std::string word = name();
    if (word == "Thing") return Concept::top();
    if (word == "Nothing") return Concept::bottom();
    if (!next_is_call()) return Concept::atomic(std::move(word));
    if (word == "Not") {
      expect('(');
      Concept inner = concept_expr();
      expect(')');
      return Concept::negation(std::move(inner));
    }
    if (word == "And" || word == "Or") {
      expect('(');
      std::vector<Concept> ops;
      ops.push_back(concept_expr());
      while (peek() == ',') {
        ++pos_;
        ops.push_back(concept_expr());
      }
      if (ops.size() < 2) fail(ParseErrorKind::Syntax, word + " needs at least two operands");
      expect(')');
      return word == "And" ? Concept::conjunction(std::move(ops))
                           : Concept::disjunction(std::move(ops));
    }
    if (word == "Some" || word == "All") {
      expect('(');
      std::string role = name();
      expect(',');
      Concept filler = concept_expr();
      expect(')');
      return word == "Some" ? Concept::some(std::move(role), std::move(filler))
                            : Concept::all(std::move(role), std::move(filler));
    }
    pos_ = start;
    fail(ParseErrorKind::Syntax, "unknown concept constructor '" + word + "'");
  }

  /// Probability literal: digit+ ('.' digit+)?, strictly between 0 and 1.
  std::optional<double> probability_prefix() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return std::nullopt;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == frac) fail(ParseErrorKind::Syntax, "expected digits after '.'");
    }
    std::string_view literal = text_.substr(start, pos_ - start);
    double value = 0.0;
    auto [end, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
    if (ec != std::errc() || end != literal.data() + literal.size() || !(value > 0.0) ||
        !(value < 1.0)) {
      std::size_t here = pos_;
      pos_ = start;
      ParseError err(ParseErrorKind::BadProbability, line_, column(),
                     "probability " + std::string(literal) + " must satisfy 0 < p < 1");
      pos_ = here;
      throw err;
    }
    expect(':');
    if (pos_ >= text_.size() || text_[pos_] != ':') {
      fail(ParseErrorKind::Syntax, "expected '::' after probability");
    }
    ++pos_;
    return value;
  }

  struct Body {
    std::optional<Axiom> axiom;  // empty for Consistent()
  };

  Body axiom_body(bool allow_consistent) {
    skip_ws();
    std::size_t start = pos_;
    std::string word = name();
    if (word == "SubClassOf") {
      expect('(');
      Concept sub = concept_expr();
      expect(',');
      Concept sup = concept_expr();
      expect(')');
      return {Gci{std::move(sub), std::move(sup)}};
    }
    if (word == "ClassAssertion") {
      expect('(');
      Concept type = concept_expr();
      expect(',');
      std::string individual = name();
      expect(')');
      return {ConceptAssertion{std::move(individual), std::move(type)}};
    }
    if (word == "PropertyAssertion") {
      expect('(');
      std::string role = name();
      expect(',');
      std::string subject = name();
      expect(',');
      std::string object = name();
      expect(')');
      return {RoleAssertion{std::move(role), std::move(subject), std::move(object)}};
    }
    if (allow_consistent && word == "Consistent") {
      expect('(');
      expect(')');
      return {};
    }
    pos_ = start;
    fail(ParseErrorKind::Syntax, "expected SubClassOf, ClassAssertion or PropertyAssertion");
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::vector<int> line_of_id;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    LineReader reader(lines[i], line_no);
    char first = reader.peek();
    if (first == '\0' || first == '#') continue;
    int axiom_column = reader.column();
    std::optional<double> p = reader.probability_prefix();
    auto body = reader.axiom_body(false);
    reader.expect_end();
    if (auto earlier = kb.find(*body.axiom)) {
      throw ParseError(ParseErrorKind::DuplicateAxiom, line_no, axiom_column,
                       "duplicate of the axiom on line " +
                           std::to_string(line_of_id[*earlier]) +
                           "; combine independent evidence p1, p2 as 1-(1-p1)(1-p2) :: E");
    }
    kb.add(std::move(*body.axiom), p);
    line_of_id.push_back(line_no);
  }
  return kb;
}

Query parse_query(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && lines[first].find_first_not_of(" \t") == std::string_view::npos) {
    ++first;
  }
  if (first == lines.size()) throw ParseError(ParseErrorKind::Syntax, 1, 1, "empty query");
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") != std::string_view::npos) {
      throw ParseError(ParseErrorKind::Syntax, static_cast<int>(i) + 1, 1,
                       "a query is a single axiom");
    }
  }
  LineReader reader(lines[first], static_cast<int>(first) + 1);
  auto body = reader.axiom_body(true);
  reader.expect_end();
  if (!body.axiom) return IsConsistentQuery{};
  if (auto* g = std::get_if<Gci>(&*body.axiom)) {
    return SubsumptionQuery{g->sub, g->sup};
  }
  if (auto* ca = std::get_if<ConceptAssertion>(&*body.axiom)) {
    return ConceptAssertionQuery{ca->individual, ca->type};
  }
  throw ParseError(ParseErrorKind::Syntax, static_cast<int>(first) + 1, 1,
                   "role assertion queries are not supported");
}

std::string format_probability(double p) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), p,
                                 std::chars_format::fixed);
  if (ec != std::errc()) throw Error(ErrorKind::InvariantViolation, "cannot format probability");
  return std::string(buf.data(), end);
}

std::string to_string(const Axiom& axiom) {
  struct Visitor {
    std::string operator()(const Gci& g) const {
      return "SubClassOf(" + to_string(g.sub) + ", " + to_string(g.sup) + ")";
    }
    std::string operator()(const ConceptAssertion& a) const {
      return "ClassAssertion(" + to_string(a.type) + ", " + a.individual + ")";
    }
    std::string operator()(const RoleAssertion& r) const {
      return "PropertyAssertion(" + r.role + ", " + r.subject + ", " + r.object + ")";
    }
  };
  return std::visit(Visitor{}, axiom);
}

std::string to_string(const Query& query) {
  struct Visitor {
    std::string operator()(const IsConsistentQuery&) const { return "Consistent()"; }
    std::string operator()(const ConceptAssertionQuery& q) const {
      return to_string(Axiom{ConceptAssertion{q.individual, q.type}});
    }
    std::string operator()(const SubsumptionQuery& q) const {
      return to_string(Axiom{Gci{q.sub, q.sup}});
    }
  };
  return std::visit(Visitor{}, query);
}

std::string describe(const AnnotatedAxiom& axiom) {
  std::string out = std::to_string(axiom.id) + ": " + to_string(axiom.axiom);
  if (axiom.probability) out += " [p=" + format_probability(*axiom.probability) + "]";
  return out;
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& a : kb.axioms()) {
    if (a.origin == Origin::FreshQuery) {
      throw Error(ErrorKind::FreshAxiomPresent,
                  "axiom " + std::to_string(a.id) + " was injected by a query transform");
    }
    if (a.probability) out += format_probability(*a.probability) + " :: ";
    out += to_string(a.axiom);
    out += '\n';
  }
  return out;
}

}  // namespace pengu
