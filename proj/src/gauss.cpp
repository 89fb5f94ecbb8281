#include "vaip/gauss.hpp"

#include <charconv>
#include <istream>
#include <map>

namespace vaip {

ParseError::ParseError(std::string message, std::size_t position)
    : Error(position ? message + " at column " + std::to_string(position)
                     : std::move(message)),
      position_(position) {}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

Pass parse_pass(std::string_view tok, std::size_t column) {
  auto fail = [&](const char* what) -> ParseError {
    return ParseError(std::string(what) + " '" + std::string(tok) + "'", column);
  };
  if (tok.size() < 3) throw fail("malformed pass");
  const char head = tok.front();
  const char tail = tok.back();
  const auto digits = tok.substr(1, tok.size() - 2);
  if (digits.front() < '1' || digits.front() > '9') throw fail("bad crossing id in");
  int id = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (ec != std::errc{} || end != digits.data() + digits.size())
    throw fail("bad crossing id in");

  if (head == 'O' || head == 'U') {
    int sign = 0;
    if (tail == '+') sign = 1;
    else if (tail == '-') sign = -1;
    else throw fail("expected sign in");
    return head == 'O' ? Pass::over(id, sign) : Pass::under(id, sign);
  }
  if (head == 'S') {
    if (tail == 'l') return Pass::singular_left(id);
    if (tail == 'r') return Pass::singular_right(id);
    throw fail("expected l or r in");
  }
  throw fail("unknown pass");
}

}  // namespace

LinkDiagram parse(std::string_view text) {
  LinkDiagram d;
  d.components.emplace_back();
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == ';') {
      d.components.emplace_back();
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) && text[i] != ';') ++i;
    d.components.back().passes.push_back(
        parse_pass(text.substr(start, i - start), start + 1));
  }
  auto report = validate(d);
  if (!report.ok()) throw ParseError(report.to_string(), 0);
  return d;
}

LinkDiagram canonicalize(const LinkDiagram& d) {
  std::map<int, int> rename;
  LinkDiagram out = d;
  for (auto& comp : out.components) {
    for (auto& p : comp.passes) {
      auto [it, inserted] =
          rename.try_emplace(p.crossing, static_cast<int>(rename.size()) + 1);
      p.crossing = it->second;
    }
  }
  return out;
}

namespace {

void write_pass(std::string& out, const Pass& p) {
  switch (p.kind) {
    case PassKind::Over: out += 'O'; break;
    case PassKind::Under: out += 'U'; break;
    case PassKind::SingularLeft:
    case PassKind::SingularRight: out += 'S'; break;
  }
  out += std::to_string(p.crossing);
  switch (p.kind) {
    case PassKind::SingularLeft: out += 'l'; break;
    case PassKind::SingularRight: out += 'r'; break;
    default: out += p.sign > 0 ? '+' : '-';
  }
}

}  // namespace

std::string serialize(const LinkDiagram& d) { return to_text(canonicalize(d)); }

std::string to_text(const LinkDiagram& c) {
  std::string out;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i > 0) {
      if (!out.empty()) out += ' ';
      out += ';';
    }
    for (const auto& p : c.components[i].passes) {
      if (!out.empty()) out += ' ';
      write_pass(out, p);
    }
  }
  return out;
}

std::vector<BatchLine> read_batch(std::istream& in) {
  std::vector<BatchLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

}  // namespace vaip
