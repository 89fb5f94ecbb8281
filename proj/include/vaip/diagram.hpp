#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vaip {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PassKind { Over, Under, SingularLeft, SingularRight };

/// Which way a strand runs through a crossing drawn with both strands
/// pointing upward. MinusOne runs bottom-left to top-right and lowers the
/// label by one; PlusOne runs bottom-right to top-left and raises it.
enum class StrandRole { MinusOne, PlusOne };

struct Pass {
  int crossing = 0;
  PassKind kind = PassKind::Over;
  int sign = 0;  // +1 or -1 for Over/Under, 0 for singular passes

  static Pass over(int id, int sign) { return {id, PassKind::Over, sign}; }
  static Pass under(int id, int sign) { return {id, PassKind::Under, sign}; }
  static Pass singular_left(int id) { return {id, PassKind::SingularLeft, 0}; }
  static Pass singular_right(int id) { return {id, PassKind::SingularRight, 0}; }

  bool is_singular() const {
    return kind == PassKind::SingularLeft || kind == PassKind::SingularRight;
  }

  friend bool operator==(const Pass&, const Pass&) = default;
};

/// Strand role of a pass. Positive crossings put the over strand on
/// MinusOne, negative crossings on PlusOne; singular passes carry it in
/// their kind.
StrandRole role_of(const Pass& pass);

/// -1 for MinusOne, +1 for PlusOne.
int index_change(StrandRole role);
inline int index_change(const Pass& pass) { return index_change(role_of(pass)); }

/// One closed strand. Position 0 sits right after the starting point.
struct Component {
  std::vector<Pass> passes;

  std::size_t size() const { return passes.size(); }
  bool empty() const { return passes.empty(); }

  friend bool operator==(const Component&, const Component&) = default;
};

/// Oriented, ordered link given by a signed Gauss code per component.
/// Virtual crossings are not represented.
struct LinkDiagram {
  std::vector<Component> components;

  std::size_t num_components() const { return components.size(); }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

struct PassRef {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const PassRef&, const PassRef&) = default;
};

/// Both passes of one crossing, addressed by strand role.
struct CrossingSite {
  int id = 0;
  int sign = 0;  // 0 for singular crossings
  PassRef minus_one;
  PassRef plus_one;

  bool singular() const { return sign == 0; }
  bool is_self() const { return minus_one.component == plus_one.component; }
  /// Classical crossings only.
  PassRef over() const { return sign > 0 ? minus_one : plus_one; }
  PassRef under() const { return sign > 0 ? plus_one : minus_one; }
};

struct Violation {
  int crossing = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate(const LinkDiagram& d);
void require_valid(const LinkDiagram& d);

const Pass& pass_at(const LinkDiagram& d, PassRef ref);

/// Crossings of a valid diagram, sorted by id.
std::vector<CrossingSite> crossings(const LinkDiagram& d);
int max_crossing_id(const LinkDiagram& d);
std::size_t singular_count(const LinkDiagram& d);
bool has_singular(const LinkDiagram& d);

int writhe(const LinkDiagram& d);

/// Signed count of external crossings, entry [i][j] summing the signs of
/// crossings where component i passes over component j. Diagonal is zero.
std::vector<std::vector<std::int64_t>> linking_degrees(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse(const LinkDiagram& d);
LinkDiagram switch_crossing(const LinkDiagram& d, int id);

/// perm[i] is the new index of component i.
LinkDiagram reorder_components(const LinkDiagram& d,
                               std::span<const std::size_t> perm);

}  // namespace vaip
