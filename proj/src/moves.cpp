#include "vaip/moves.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "vaip/labeling.hpp"

namespace vaip {

namespace {

struct PassPair {
  std::array<PassRef, 2> refs;
  int count = 0;
};

std::map<int, PassPair> locate(const LinkDiagram& d) {
  std::map<int, PassPair> out;
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    const auto& passes = d.components[c].passes;
    for (std::size_t k = 0; k < passes.size(); ++k) {
      auto& pp = out[passes[k].crossing];
      if (pp.count < 2) pp.refs[static_cast<std::size_t>(pp.count)] = {c, k};
      ++pp.count;
    }
  }
  return out;
}

PassPair find_crossing(const LinkDiagram& d, int id) {
  auto all = locate(d);
  auto it = all.find(id);
  if (it == all.end()) throw MoveError("unknown crossing " + std::to_string(id));
  return it->second;
}

std::vector<Int> weights_of(const LinkDiagram& d) {
  return propagate(d).component_weights;
}

// Arc 0 runs from the starting point to pass 0. On a weighted component
// nothing is inserted into it and no block bordering it is changed.
bool insert_allowed(const std::vector<Int>& w, std::size_t comp, std::size_t pos) {
  return pos != 0 || w.at(comp) == 0;
}

bool block_allowed(const std::vector<Int>& w, std::size_t comp, std::size_t start) {
  return start != 0 || w.at(comp) == 0;
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw MoveError("sign must be +1 or -1");
}

void check_insert(const LinkDiagram& d, const std::vector<Int>& w,
                  std::size_t comp, std::size_t pos) {
  if (comp >= d.num_components())
    throw MoveError("no component " + std::to_string(comp + 1));
  if (pos > d.components[comp].size())
    throw MoveError("position " + std::to_string(pos) + " past the end of component " +
                    std::to_string(comp + 1));
  if (!insert_allowed(w, comp, pos))
    throw MoveError("position " + std::to_string(pos) + " is at the starting point of weighted component " +
                    std::to_string(comp + 1));
}

bool adjacent(PassRef a, PassRef b) {
  return a.component == b.component &&
         (a.position + 1 == b.position || b.position + 1 == a.position);
}

PassRef block_start(PassRef a, PassRef b) { return a.position < b.position ? a : b; }

void erase_passes(LinkDiagram& d, std::vector<PassRef> refs) {
  std::sort(refs.begin(), refs.end(), [](PassRef a, PassRef b) {
    return a.component != b.component ? a.component > b.component
                                      : a.position > b.position;
  });
  for (auto r : refs) {
    auto& passes = d.components[r.component].passes;
    passes.erase(passes.begin() + static_cast<std::ptrdiff_t>(r.position));
  }
}

void insert_block(LinkDiagram& d, std::size_t comp, std::size_t pos, Pass first, Pass second) {
  auto& passes = d.components[comp].passes;
  passes.insert(passes.begin() + static_cast<std::ptrdiff_t>(pos), {first, second});
}

void require_classical_valid(const LinkDiagram& d) {
  require_valid(d);
  if (has_singular(d)) throw MoveError("moves apply to classical diagrams only");
}

// --- R3 geometry ------------------------------------------------------------

struct Segment {
  PassRef first;   // earlier along the strand
  PassRef second;  // first.position + 1
};

struct R3Pass {
  int crossing;
  PassRef ref;
  bool over;
};

// Three segments with T over Mid over B. With o_X = +1 when strand X meets
// its crossing with the higher strand first (T: Mid before B), a triangle
// drawn by three lines exists iff o_T o_M = s_TB s_MB and o_T o_B = s_TM s_MB.
bool realizable_triangle(const LinkDiagram& d, const std::array<Segment, 3>& segs) {
  auto over_count = [&](const Segment& s) {
    return (pass_at(d, s.first).kind == PassKind::Over) +
           (pass_at(d, s.second).kind == PassKind::Over);
  };
  const Segment* top = nullptr;
  const Segment* mid = nullptr;
  const Segment* bot = nullptr;
  for (const auto& s : segs) {
    switch (over_count(s)) {
      case 2: top = &s; break;
      case 1: mid = &s; break;
      default: bot = &s; break;
    }
  }
  if (!top || !mid || !bot) return false;

  auto ids = [&](const Segment& s) {
    return std::pair{pass_at(d, s.first).crossing, pass_at(d, s.second).crossing};
  };
  auto shared = [&](const Segment& x, const Segment& y) {
    auto [x1, x2] = ids(x);
    auto [y1, y2] = ids(y);
    return (x1 == y1 || x1 == y2) ? x1 : x2;
  };
  const int tm = shared(*top, *mid);
  const int tb = shared(*top, *bot);
  const int mb = shared(*mid, *bot);
  auto sign_of = [&](const Segment& s, int id) {
    return pass_at(d, s.first).crossing == id ? pass_at(d, s.first).sign
                                              : pass_at(d, s.second).sign;
  };
  const int s_tm = sign_of(*top, tm);
  const int s_tb = sign_of(*top, tb);
  const int s_mb = sign_of(*mid, mb);
  auto order = [&](const Segment& s, int first_expected) {
    return pass_at(d, s.first).crossing == first_expected ? 1 : -1;
  };
  const int o_t = order(*top, tm);
  const int o_m = order(*mid, tm);
  const int o_b = order(*bot, tb);
  return o_t * o_m == s_tb * s_mb && o_t * o_b == s_tm * s_mb;
}

bool match_segments(const LinkDiagram& d, const std::vector<R3Pass>& ps,
                    std::array<bool, 6>& used, std::vector<Segment>& acc,
                    const std::vector<Int>& w, std::array<Segment, 3>& out) {
  std::size_t i = 0;
  while (i < ps.size() && used[i]) ++i;
  if (i == ps.size()) {
    std::array<Segment, 3> segs{acc[0], acc[1], acc[2]};
    if (!realizable_triangle(d, segs)) return false;
    out = segs;
    return true;
  }
  used[i] = true;
  for (std::size_t j = i + 1; j < ps.size(); ++j) {
    if (used[j] || ps[j].crossing == ps[i].crossing) continue;
    if (!adjacent(ps[i].ref, ps[j].ref)) continue;
    const PassRef start = block_start(ps[i].ref, ps[j].ref);
    if (!block_allowed(w, start.component, start.position)) continue;
    const PassRef end = start == ps[i].ref ? ps[j].ref : ps[i].ref;
    used[j] = true;
    acc.push_back({start, end});
    if (match_segments(d, ps, used, acc, w, out)) return true;
    acc.pop_back();
    used[j] = false;
  }
  used[i] = false;
  return false;
}

std::optional<std::array<Segment, 3>> r3_segments(const LinkDiagram& d,
                                                  const std::vector<Int>& w,
                                                  int a, int b, int c) {
  if (a == b || a == c || b == c) return std::nullopt;
  auto all = locate(d);
  std::vector<R3Pass> ps;
  for (int id : {a, b, c}) {
    auto it = all.find(id);
    if (it == all.end() || it->second.count != 2) return std::nullopt;
    for (auto ref : it->second.refs) {
      const Pass& p = pass_at(d, ref);
      if (p.is_singular()) return std::nullopt;
      ps.push_back({id, ref, p.kind == PassKind::Over});
    }
  }
  std::array<bool, 6> used{};
  std::vector<Segment> acc;
  std::array<Segment, 3> out;
  if (match_segments(d, ps, used, acc, w, out)) return out;
  return std::nullopt;
}

}  // namespace

// --- R1 -----------------------------------------------------------------------

LinkDiagram r1_insert(const LinkDiagram& d, const R1Insert& m) {
  require_classical_valid(d);
  check_sign(m.sign);
  check_insert(d, weights_of(d), m.component, m.position);
  const int id = max_crossing_id(d) + 1;
  LinkDiagram out = d;
  const Pass o = Pass::over(id, m.sign);
  const Pass u = Pass::under(id, m.sign);
  insert_block(out, m.component, m.position, m.over_first ? o : u, m.over_first ? u : o);
  return out;
}

LinkDiagram r1_remove(const LinkDiagram& d, int crossing) {
  require_classical_valid(d);
  const auto pp = find_crossing(d, crossing);
  if (!adjacent(pp.refs[0], pp.refs[1]))
    throw MoveError("crossing " + std::to_string(crossing) + " is not a kink");
  const auto start = block_start(pp.refs[0], pp.refs[1]);
  if (!block_allowed(weights_of(d), start.component, start.position))
    throw MoveError("kink touches the starting point of a weighted component");
  LinkDiagram out = d;
  erase_passes(out, {pp.refs[0], pp.refs[1]});
  return out;
}

// --- R2 -----------------------------------------------------------------------

LinkDiagram r2_insert(const LinkDiagram& d, const R2Insert& m) {
  require_classical_valid(d);
  check_sign(m.sign);
  const auto w = weights_of(d);
  check_insert(d, w, m.over_component, m.over_position);
  const int first = max_crossing_id(d) + 1;
  const int second = first + 1;
#ifdef VAIP_FAULT_R2_SIGN
  const int second_sign = m.sign;
#else
  const int second_sign = -m.sign;
#endif

  LinkDiagram out = d;
  insert_block(out, m.over_component, m.over_position, Pass::over(first, m.sign),
               Pass::over(second, second_sign));
  check_insert(out, w, m.under_component, m.under_position);
  if (m.under_component == m.over_component && m.under_position == m.over_position + 1)
    throw MoveError("under block would split the over block");
  const Pass u1 = Pass::under(first, m.sign);
  const Pass u2 = Pass::under(second, second_sign);
  insert_block(out, m.under_component, m.under_position, m.parallel ? u1 : u2,
               m.parallel ? u2 : u1);
  return out;
}

namespace {

struct R2Site {
  PassRef over_start;
  PassRef under_start;
  int first_over;   // crossing met first along the over strand
  int first_under;  // crossing met first along the under strand
};

R2Site r2_site(const LinkDiagram& d, int a, int b) {
  if (a == b) throw MoveError("R2 removal needs two distinct crossings");
  const auto pa = find_crossing(d, a);
  const auto pb = find_crossing(d, b);
  auto over_ref = [&](const PassPair& pp) {
    return pass_at(d, pp.refs[0]).kind == PassKind::Over ? pp.refs[0] : pp.refs[1];
  };
  auto under_ref = [&](const PassPair& pp) {
    return pass_at(d, pp.refs[0]).kind == PassKind::Over ? pp.refs[1] : pp.refs[0];
  };
  const PassRef oa = over_ref(pa), ob = over_ref(pb);
  const PassRef ua = under_ref(pa), ub = under_ref(pb);
  if (pass_at(d, oa).sign != -pass_at(d, ob).sign)
    throw MoveError("R2 crossings must have opposite signs");
  if (!adjacent(oa, ob) || !adjacent(ua, ub))
    throw MoveError("R2 crossings are not a bigon");
  const auto w = weights_of(d);
  const PassRef os = block_start(oa, ob);
  const PassRef us = block_start(ua, ub);
  if (!block_allowed(w, os.component, os.position) ||
      !block_allowed(w, us.component, us.position))
    throw MoveError("bigon touches the starting point of a weighted component");
  return {os, us, pass_at(d, os).crossing, pass_at(d, us).crossing};
}

}  // namespace

LinkDiagram r2_remove(const LinkDiagram& d, int first, int second) {
  require_classical_valid(d);
  const auto site = r2_site(d, first, second);
  LinkDiagram out = d;
  erase_passes(out, {site.over_start,
                     {site.over_start.component, site.over_start.position + 1},
                     site.under_start,
                     {site.under_start.component, site.under_start.position + 1}});
  return out;
}

// --- R3 -----------------------------------------------------------------------

LinkDiagram r3_apply(const LinkDiagram& d, int a, int b, int c) {
  require_classical_valid(d);
  const auto segs = r3_segments(d, weights_of(d), a, b, c);
  if (!segs) throw MoveError("crossings do not form an R3 triangle");
  LinkDiagram out = d;
  for (const auto& s : *segs) {
    auto& passes = out.components[s.first.component].passes;
    std::swap(passes[s.first.position], passes[s.second.position]);
  }
  return out;
}

// --- dispatch -------------------------------------------------------------------

LinkDiagram apply(const LinkDiagram& d, const MoveSpec& m) {
  return std::visit(
      [&](const auto& mv) -> LinkDiagram {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) return r1_insert(d, mv);
        else if constexpr (std::is_same_v<T, R1Remove>) return r1_remove(d, mv.crossing);
        else if constexpr (std::is_same_v<T, R2Insert>) return r2_insert(d, mv);
        else if constexpr (std::is_same_v<T, R2Remove>) return r2_remove(d, mv.first, mv.second);
        else return r3_apply(d, mv.a, mv.b, mv.c);
      },
      m);
}

AppliedMove apply_with_inverse(const LinkDiagram& d, const MoveSpec& m) {
  const int next = max_crossing_id(d) + 1;
  LinkDiagram result = vaip::apply(d, m);
  MoveSpec inv = std::visit(
      [&](const auto& mv) -> MoveSpec {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          return R1Remove{next};
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          const auto pp = find_crossing(d, mv.crossing);
          const auto start = block_start(pp.refs[0], pp.refs[1]);
          const Pass& p = pass_at(d, start);
          return R1Insert{start.component, start.position, p.sign, p.kind == PassKind::Over};
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          return R2Remove{next, next + 1};
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          const auto site = r2_site(d, mv.first, mv.second);
          R2Insert back;
          back.over_component = site.over_start.component;
          back.over_position = site.over_start.position;
          if (site.under_start.component == site.over_start.component &&
              site.under_start.position < site.over_start.position)
            back.over_position -= 2;
          back.under_component = site.under_start.component;
          back.under_position = site.under_start.position;
          back.sign = pass_at(d, site.over_start).sign;
          back.parallel = site.first_over == site.first_under;
          return back;
        } else {
          return mv;
        }
      },
      m);
  return {std::move(result), std::move(inv)};
}

// --- site search ------------------------------------------------------------------

std::vector<MoveSpec> r1_removal_sites(const LinkDiagram& d) {
  require_classical_valid(d);
  const auto w = weights_of(d);
  std::vector<MoveSpec> out;
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    const auto& passes = d.components[c].passes;
    for (std::size_t k = 0; k + 1 < passes.size(); ++k) {
      if (passes[k].crossing == passes[k + 1].crossing && block_allowed(w, c, k))
        out.push_back(R1Remove{passes[k].crossing});
    }
  }
  return out;
}

std::vector<MoveSpec> r2_removal_sites(const LinkDiagram& d) {
  require_classical_valid(d);
  std::set<std::pair<int, int>> candidates;
  for (const auto& comp : d.components) {
    const auto& passes = comp.passes;
    for (std::size_t k = 0; k + 1 < passes.size(); ++k) {
      const Pass& x = passes[k];
      const Pass& y = passes[k + 1];
      if (x.kind == PassKind::Over && y.kind == PassKind::Over && x.sign == -y.sign &&
          x.crossing != y.crossing)
        candidates.insert({std::min(x.crossing, y.crossing), std::max(x.crossing, y.crossing)});
    }
  }
  std::vector<MoveSpec> out;
  for (auto [a, b] : candidates) {
    try {
      (void)r2_site(d, a, b);
      out.push_back(R2Remove{a, b});
    } catch (const MoveError&) {
    }
  }
  return out;
}

std::vector<MoveSpec> r3_sites(const LinkDiagram& d) {
  require_classical_valid(d);
  const auto w = weights_of(d);
  std::map<int, std::set<int>> adj;
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    const auto& passes = d.components[c].passes;
    for (std::size_t k = 0; k + 1 < passes.size(); ++k) {
      const int x = passes[k].crossing;
      const int y = passes[k + 1].crossing;
      if (x == y || !block_allowed(w, c, k)) continue;
      adj[x].insert(y);
      adj[y].insert(x);
    }
  }
  std::vector<MoveSpec> out;
  for (const auto& [a, na] : adj) {
    for (int b : na) {
      if (b <= a) continue;
      for (int c : na) {
        if (c <= b || !adj[b].contains(c)) continue;
        if (r3_segments(d, w, a, b, c)) out.push_back(R3Move{a, b, c});
      }
    }
  }
  return out;
}

// --- text -------------------------------------------------------------------------

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

}  // namespace

std::string to_string(const MoveSpec& m) {
  std::ostringstream out;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          out << "R1I " << mv.component + 1 << ' ' << mv.position << ' '
              << sign_char(mv.sign) << ' ' << (mv.over_first ? 'O' : 'U');
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          out << "R1R " << mv.crossing;
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          out << "R2I " << mv.over_component + 1 << ' ' << mv.over_position << ' '
              << mv.under_component + 1 << ' ' << mv.under_position << ' '
              << sign_char(mv.sign) << ' ' << (mv.parallel ? 'P' : 'A');
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          out << "R2R " << mv.first << ' ' << mv.second;
        } else {
          out << "R3 " << mv.a << ' ' << mv.b << ' ' << mv.c;
        }
      },
      m);
  return out.str();
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

template <typename T>
T parse_number(const std::string& s) {
  T v{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    throw MoveError("bad number '" + s + "' in move");
  return v;
}

int parse_sign(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw MoveError("bad sign '" + s + "' in move");
}

std::size_t parse_component(const std::string& s) {
  const auto v = parse_number<std::size_t>(s);
  if (v == 0) throw MoveError("components are numbered from 1");
  return v - 1;
}

}  // namespace

MoveSpec parse_move(std::string_view text) {
  const auto w = split_words(text);
  if (w.empty()) throw MoveError("empty move");
  auto need = [&](std::size_t n) {
    if (w.size() != n) throw MoveError("wrong field count in move '" + std::string(text) + "'");
  };
  if (w[0] == "R1I") {
    need(5);
    if (w[4] != "O" && w[4] != "U") throw MoveError("R1I needs O or U");
    return R1Insert{parse_component(w[1]), parse_number<std::size_t>(w[2]),
                    parse_sign(w[3]), w[4] == "O"};
  }
  if (w[0] == "R1R") {
    need(2);
    return R1Remove{parse_number<int>(w[1])};
  }
  if (w[0] == "R2I") {
    need(7);
    if (w[6] != "P" && w[6] != "A") throw MoveError("R2I needs P or A");
    return R2Insert{parse_component(w[1]), parse_number<std::size_t>(w[2]),
                    parse_component(w[3]), parse_number<std::size_t>(w[4]),
                    parse_sign(w[5]), w[6] == "P"};
  }
  if (w[0] == "R2R") {
    need(3);
    return R2Remove{parse_number<int>(w[1]), parse_number<int>(w[2])};
  }
  if (w[0] == "R3") {
    need(4);
    return R3Move{parse_number<int>(w[1]), parse_number<int>(w[2]), parse_number<int>(w[3])};
  }
  throw MoveError("unknown move '" + w[0] + "'");
}

std::string format_trace(std::span<const MoveSpec> moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += " | ";
    out += to_string(moves[i]);
  }
  return out;
}

std::vector<MoveSpec> parse_trace(std::string_view text) {
  std::vector<MoveSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    auto piece = text.substr(start, bar - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_move(piece));
    start = bar + 1;
  }
  return out;
}

LinkDiagram replay(const LinkDiagram& d, std::span<const MoveSpec> moves) {
  LinkDiagram cur = d;
  for (const auto& m : moves) cur = vaip::apply(cur, m);
  return cur;
}

// --- fuzzing ------------------------------------------------------------------------

namespace {

class Fuzzer {
 public:
  Fuzzer(std::uint64_t seed) : rng_(seed) {}

  FuzzResult run(const LinkDiagram& d, std::size_t n_moves) {
    require_classical_valid(d);
    FuzzResult res{d, {}};
    std::size_t attempts = 0;
    const std::size_t max_attempts = 200 * n_moves + 100;
    while (res.moves.size() < n_moves && attempts++ < max_attempts) {
      const bool early = res.moves.size() * 2 < n_moves;
      const std::size_t remaining = n_moves - res.moves.size();
      std::vector<MoveSpec> batch;
      switch (pick_kind(early)) {
        case 0: batch = draw_r1_insert(res.diagram); break;
        case 1: batch = draw_r2_insert(res.diagram); break;
        case 2: batch = draw_r3(res.diagram, remaining); break;
        case 3: batch = pick_one(r1_removal_sites(res.diagram)); break;
        default: batch = pick_one(r2_removal_sites(res.diagram)); break;
      }
      if (batch.empty() || batch.size() > remaining) continue;
      LinkDiagram next = res.diagram;
      try {
        next = replay(next, batch);
      } catch (const MoveError&) {
        continue;
      }
      res.diagram = std::move(next);
      res.moves.insert(res.moves.end(), batch.begin(), batch.end());
    }
    return res;
  }

 private:
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin() { return below(2) == 1; }
  int sign() { return coin() ? 1 : -1; }

  int pick_kind(bool early) {
    // R1I, R2I, R3, R1R, R2R
    static constexpr std::array<int, 5> early_w{3, 4, 3, 1, 1};
    static constexpr std::array<int, 5> late_w{2, 2, 3, 3, 3};
    const auto& w = early ? early_w : late_w;
    std::size_t r = below(12);
    for (int k = 0; k < 5; ++k) {
      if (r < static_cast<std::size_t>(w[k])) return k;
      r -= static_cast<std::size_t>(w[k]);
    }
    return 0;
  }

  std::vector<MoveSpec> pick_one(const std::vector<MoveSpec>& sites) {
    if (sites.empty()) return {};
    return {sites[below(sites.size())]};
  }

  std::optional<std::size_t> position(const LinkDiagram& d, const std::vector<Int>& w,
                                      std::size_t comp, std::size_t extra = 0) {
    const std::size_t n = d.components[comp].size() + extra + 1;
    if (w[comp] == 0) return below(n);
    if (n == 1) return std::nullopt;
    return 1 + below(n - 1);
  }

  std::vector<MoveSpec> draw_r1_insert(const LinkDiagram& d) {
    const auto w = weights_of(d);
    const std::size_t comp = below(d.num_components());
    auto pos = position(d, w, comp);
    if (!pos) return {};
    return {R1Insert{comp, *pos, sign(), coin()}};
  }

  std::vector<MoveSpec> draw_r2_insert(const LinkDiagram& d) {
    const auto w = weights_of(d);
    R2Insert m;
    m.over_component = below(d.num_components());
    m.under_component = below(d.num_components());
    auto op = position(d, w, m.over_component);
    auto up = position(d, w, m.under_component,
                       m.under_component == m.over_component ? 2 : 0);
    if (!op || !up) return {};
    m.over_position = *op;
    m.under_position = *up;
    m.sign = sign();
    m.parallel = coin();
    return {m};
  }

  std::vector<MoveSpec> draw_r3(const LinkDiagram& d, std::size_t remaining) {
    auto sites = r3_sites(d);
    if (!sites.empty() && (remaining < 3 || coin())) return pick_one(sites);
    if (remaining < 3) return {};
    return plan_r3_setup(d);
  }

  // Two R2 insertions next to an existing crossing x and next to each other
  // on a third strand, chosen so that x and one crossing of each bigon form
  // an R3 triangle.
  std::vector<MoveSpec> plan_r3_setup(const LinkDiagram& d) {
    std::vector<CrossingSite> sites = crossings(d);
    if (sites.empty()) return {};
    const CrossingSite x = sites[below(sites.size())];
    const bool near_over = coin();
    const PassKind far_kind = near_over ? PassKind::Under : PassKind::Over;
    const PassRef p1 = near_over ? x.over() : x.under();
    const auto w = weights_of(d);
    const std::size_t s3 = below(d.num_components());
    auto r = position(d, w, s3);
    if (!r) return {};

    const int y_base = max_crossing_id(d) + 1;
    const int z_base = y_base + 2;

    auto first_moves = bigon_candidates(p1.component, p1.position, s3, *r);
    shuffle(first_moves);
    for (const auto& [m1, near_is_over] : first_moves) {
      LinkDiagram d1;
      try {
        d1 = r2_insert(d, m1);
      } catch (const MoveError&) {
        continue;
      }
      const PassRef q = find_pass(d1, x.id, far_kind);
      // the y block on the third strand is the one not next to x
      const PassKind s3_kind = near_is_over ? PassKind::Under : PassKind::Over;
      const PassRef ya = find_pass(d1, y_base, s3_kind);
      const PassRef yb = find_pass(d1, y_base + 1, s3_kind);
      const PassRef yblock = block_start(ya, yb);
      std::vector<std::pair<R2Insert, bool>> second_moves;
      for (std::size_t at : {yblock.position, yblock.position + 2}) {
        auto more = bigon_candidates(q.component, q.position, s3, at);
        second_moves.insert(second_moves.end(), more.begin(), more.end());
      }
      shuffle(second_moves);
      for (const auto& [m2, unused] : second_moves) {
        (void)unused;
        LinkDiagram d2;
        try {
          d2 = r2_insert(d1, m2);
        } catch (const MoveError&) {
          continue;
        }
        const auto w2 = weights_of(d2);
        for (int y : {y_base, y_base + 1}) {
          for (int z : {z_base, z_base + 1}) {
            if (r3_segments(d2, w2, x.id, y, z))
              return {m1, m2, R3Move{x.id, y, z}};
          }
        }
      }
    }
    return {};
  }

  // R2 insertions between the gap next to pass (comp, pos) and gap `far` of
  // component far_comp, in all variants. The flag says whether the near
  // strand is the over strand.
  std::vector<std::pair<R2Insert, bool>> bigon_candidates(std::size_t comp, std::size_t pos,
                                                          std::size_t far_comp,
                                                          std::size_t far) {
    std::vector<std::pair<R2Insert, bool>> out;
    for (std::size_t near : {pos, pos + 1}) {
      for (bool near_over : {true, false}) {
        for (int s : {1, -1}) {
          for (bool parallel : {true, false}) {
            R2Insert m;
            m.sign = s;
            m.parallel = parallel;
            const std::size_t oc = near_over ? comp : far_comp;
            const std::size_t op = near_over ? near : far;
            const std::size_t uc = near_over ? far_comp : comp;
            std::size_t up = near_over ? far : near;
            if (uc == oc && up >= op) up += 2;
            m.over_component = oc;
            m.over_position = op;
            m.under_component = uc;
            m.under_position = up;
            out.push_back({m, near_over});
          }
        }
      }
    }
    return out;
  }

  static PassRef find_pass(const LinkDiagram& d, int id, PassKind kind) {
    for (std::size_t c = 0; c < d.num_components(); ++c) {
      const auto& passes = d.components[c].passes;
      for (std::size_t k = 0; k < passes.size(); ++k)
        if (passes[k].crossing == id && passes[k].kind == kind) return {c, k};
    }
    throw MoveError("pass not found");
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937_64 rng_;
};

}  // namespace

FuzzResult fuzz(const LinkDiagram& d, std::uint64_t seed, std::size_t n_moves) {
  return Fuzzer(seed).run(d, n_moves);
}

}  // namespace vaip
