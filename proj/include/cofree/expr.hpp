#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cofree/cotensor.hpp"
#include "cofree/grouphopf.hpp"
#include "cofree/lincomb.hpp"

namespace cofree {

/// Syntax or reference error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// A group annotation as written: either an exponent literal K{...} or a
/// product of generator names with optional powers.
struct GroupSyntax {
  std::optional<std::vector<int>> exps;
  std::vector<std::pair<std::string, int>> factors;
  int column = 0;
};

struct LetterSyntax {
  std::string name;
  std::optional<GroupSyntax> group;
  int column = 0;
};

/// coeff * (word | group literal | nothing) [# group].
struct TermSyntax {
  Scalar coeff;
  std::vector<LetterSyntax> word;
  std::optional<GroupSyntax> group_only;
  std::optional<GroupSyntax> smash_group;
  int column = 0;
};

struct ExpressionSyntax {
  std::vector<TermSyntax> terms;
};

/// Parses `text` under the expression grammar:
///
///   element := ['-'] term (('+' | '-') term)*
///   term    := scalar* ['*'] (word | group) ['#' group] | scalar+
///   word    := mletter ('@' mletter)*
///   mletter := LETTER ['.' group]
///   group   := 'K{' int (',' int)* '}' | NAME ['^' int]
///   scalar  := rational | 'q' | 'q^' int | '(' element-of-scalars ')'
///
/// Juxtaposed scalars multiply. The Unicode minus sign is accepted for '-'.
/// `line` is reported in diagnostics.
ExpressionSyntax parse_expression(std::string_view text, int line = 1);

/// A scalar-only expression (no word, no group).
Scalar parse_scalar(std::string_view text, int line = 1, int column_offset = 0);

GroupElement resolve_group(const GroupSyntax& g, const AbelianGroup& group, int line = 1);

/// Element of T(V); group annotations are rejected.
Element to_element(const ExpressionSyntax& e, const AlphabetRef& alphabet, int line = 1);
/// Element of T^c_H(M): annotated words are taken as written, unannotated
/// words are lifted by psi, group literals give the degree-0 part.
CotensorElement to_cotensor(const ExpressionSyntax& e, const HopfBimodule& m, int line = 1);
/// Element of T(V)#H: "word # group"; a missing '#' means the neutral element.
SmashElement to_smash_element(const ExpressionSyntax& e, const HopfBimodule& m, int line = 1);

}  // namespace cofree
