#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vaip/diagram.hpp"

namespace vaip {

// Classical Reidemeister rewrites on Gauss codes. Virtual and mixed moves
// do not change a Gauss code and have no representation here.
//
// Starting points: every block of passes a move inserts, removes or
// reorders is contiguous in the component's sequence, so a move never
// straddles a starting point. On components of nonzero weight moves also
// stay off arc 0, the arc from the starting point to pass 0: no insertion
// at position 0 and no removed or reordered block starting there.

/// Kink: two adjacent passes of a new crossing.
struct R1Insert {
  std::size_t component = 0;
  std::size_t position = 0;  // insert before this pass; 0..size
  int sign = 1;
  bool over_first = true;
  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};

struct R1Remove {
  int crossing = 0;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

/// Two new crossings of opposite signs; one strand passes over both. The
/// over block goes in first at over_position; under_position indexes the
/// sequence after that insertion. The first crossing met along the over
/// strand has sign `sign`. `parallel` means the under strand meets the two
/// crossings in the same order.
struct R2Insert {
  std::size_t over_component = 0;
  std::size_t over_position = 0;
  std::size_t under_component = 0;
  std::size_t under_position = 0;
  int sign = 1;
  bool parallel = true;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

struct R2Remove {
  int first = 0;
  int second = 0;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

/// Reverses the pass order on each of the three strand segments of a
/// triangle. Signs and over/under data are unchanged; the move is its own
/// inverse.
struct R3Move {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

using MoveSpec = std::variant<R1Insert, R1Remove, R2Insert, R2Remove, R3Move>;

class MoveError : public Error {
 public:
  using Error::Error;
};

LinkDiagram r1_insert(const LinkDiagram& d, const R1Insert& m);
LinkDiagram r1_remove(const LinkDiagram& d, int crossing);
LinkDiagram r2_insert(const LinkDiagram& d, const R2Insert& m);
LinkDiagram r2_remove(const LinkDiagram& d, int first, int second);
LinkDiagram r3_apply(const LinkDiagram& d, int a, int b, int c);

LinkDiagram apply(const LinkDiagram& d, const MoveSpec& m);

struct AppliedMove {
  LinkDiagram diagram;
  MoveSpec inverse;
};

/// Applies m and returns the move that undoes it on the result. Undoing an
/// insertion may renumber nothing; undoing a removal introduces fresh ids.
AppliedMove apply_with_inverse(const LinkDiagram& d, const MoveSpec& m);

std::vector<MoveSpec> r1_removal_sites(const LinkDiagram& d);
std::vector<MoveSpec> r2_removal_sites(const LinkDiagram& d);
std::vector<MoveSpec> r3_sites(const LinkDiagram& d);

/// One-line text forms, components 1-based:
///   R1I <comp> <pos> <+|-> <O|U>     R1R <id>
///   R2I <ocomp> <opos> <ucomp> <upos> <+|-> <P|A>     R2R <id> <id>
///   R3 <id> <id> <id>
std::string to_string(const MoveSpec& m);
MoveSpec parse_move(std::string_view text);
/// Moves joined by " | ".
std::string format_trace(std::span<const MoveSpec> moves);
std::vector<MoveSpec> parse_trace(std::string_view text);

LinkDiagram replay(const LinkDiagram& d, std::span<const MoveSpec> moves);

struct FuzzResult {
  LinkDiagram diagram;
  std::vector<MoveSpec> moves;
};

/// Applies n_moves random sound moves to a classical diagram. Deterministic
/// per seed; replay(d, result.moves) == result.diagram.
FuzzResult fuzz(const LinkDiagram& d, std::uint64_t seed, std::size_t n_moves);

}  // namespace vaip
