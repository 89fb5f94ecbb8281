#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vaip/diagram.hpp"

namespace vaip {

/// Text form of a diagram, tokens separated by whitespace:
///
///   link      := component (";" component)*
///   component := pass*
///   pass      := ("O"|"U") id ("+"|"-")  |  "S" id ("l"|"r")
///
/// "l" marks the MinusOne strand of a singular crossing, "r" the PlusOne one.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position);
  /// 1-based column of the offending token; 0 for structural errors.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses and validates. Structural problems are reported as ParseError
/// with position 0 and the validation messages.
LinkDiagram parse(std::string_view text);

/// Renumbers crossings 1..m in order of first occurrence.
LinkDiagram canonicalize(const LinkDiagram& d);

/// Canonical text: renumbered, single spaces, components joined by " ; ".
std::string serialize(const LinkDiagram& d);

/// Same layout as serialize, keeping the crossing ids.
std::string to_text(const LinkDiagram& d);

struct BatchLine {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

/// One link per line; blank lines and lines starting with '#' are skipped.
std::vector<BatchLine> read_batch(std::istream& in);

}  // namespace vaip
