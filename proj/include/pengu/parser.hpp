#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "pengu/concept.hpp"
#include "pengu/knowledge_base.hpp"

namespace pengu {

enum class ParseErrorKind { Syntax, BadProbability, DuplicateAxiom, BadName };

const char* to_string(ParseErrorKind kind);

/// Parse failure with a 1-based position inside the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, std::string message);

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
  std::string message_;
};

struct IsConsistentQuery {
  friend bool operator==(const IsConsistentQuery&, const IsConsistentQuery&) = default;
};

/// Is `individual : type` entailed?
struct ConceptAssertionQuery {
  std::string individual;
  Concept type;
  friend bool operator==(const ConceptAssertionQuery&, const ConceptAssertionQuery&) = default;
};

/// Is `sub ⊑ sup` entailed?
struct SubsumptionQuery {
  Concept sub;
  Concept sup;
  friend bool operator==(const SubsumptionQuery&, const SubsumptionQuery&) = default;
};

using Query = std::variant<IsConsistentQuery, ConceptAssertionQuery, SubsumptionQuery>;

/// Parses the line-oriented KB format:
///
///     # comment
///     0.9 :: SubClassOf(Penguin, Bird)
///     ClassAssertion(Penguin, pingu)
///     PropertyAssertion(likes, pingu, fish)
///
/// Axiom ids follow line order. Throws ParseError.
KnowledgeBase parse_kb(std::string_view text);

/// Inverse of parse_kb. Throws Error{FreshAxiomPresent} for transformed KBs.
std::string serialize_kb(const KnowledgeBase& kb);

/// Same body grammar as a KB line without probability, plus `Consistent()`.
Query parse_query(std::string_view text);

/// Shortest round-trip decimal without exponent, e.g. 0.9 -> "0.9".
std::string format_probability(double p);

std::string to_string(const Axiom& axiom);
std::string to_string(const Query& query);
/// `<id>: <axiom> [p=<p>]`, the form used in reports.
std::string describe(const AnnotatedAxiom& axiom);

}  // namespace pengu
