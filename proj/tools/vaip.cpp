#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vaip/gauss.hpp"
#include "vaip/invariant.hpp"
#include "vaip/moves.hpp"
#include "vaip/poly_json.hpp"
#include "vaip/shift.hpp"
#include "vaip/vassiliev.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kBadInput = 2;

struct Record {
  std::size_t line = 0;
  vaip::LinkDiagram diagram;
};

struct Input {
  std::vector<Record> records;
  bool ok = true;
};

Input load(const std::string& path) {
  Input in;
  std::vector<vaip::BatchLine> lines;
  if (path == "-") {
    lines = vaip::read_batch(std::cin);
  } else {
    std::ifstream file(path);
    if (!file) {
      std::cerr << "error: cannot read " << path << "\n";
      in.ok = false;
      return in;
    }
    lines = vaip::read_batch(file);
  }
  for (const auto& l : lines) {
    try {
      in.records.push_back({l.line_number, vaip::parse(l.text)});
    } catch (const vaip::ParseError& e) {
      std::cerr << "line " << l.line_number;
      if (e.position() > 0) std::cerr << ", column " << e.position();
      std::cerr << ": " << e.what() << "\n";
      in.ok = false;
    }
  }
  return in;
}

std::string weights_text(const std::vector<vaip::Int>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + "]";
}

// "2,1": the new first component is old component 2. Returns perm[old] = new.
std::vector<std::size_t> parse_order(const std::string& text, std::size_t n) {
  std::vector<std::size_t> listed;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size() || v == 0) throw vaip::Error("bad --order entry '" + item + "'");
    listed.push_back(v - 1);
  }
  if (listed.size() != n)
    throw vaip::Error("--order lists " + std::to_string(listed.size()) + " components, diagram has " +
                      std::to_string(n));
  std::vector<std::size_t> perm(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (listed[j] >= n || perm[listed[j]] != n) throw vaip::Error("--order is not a permutation");
    perm[listed[j]] = j;
  }
  return perm;
}

struct ComputeOptions {
  std::string file;
  std::string format = "text";
  std::string collapse;
  std::string order;
};

int cmd_compute(const ComputeOptions& o) {
  auto in = load(o.file);
  int rc = in.ok ? kOk : kBadInput;
  for (const auto& r : in.records) {
    try {
      vaip::LinkDiagram d = r.diagram;
      if (!o.order.empty()) d = vaip::reorder_components(d, parse_order(o.order, d.num_components()));
      const auto inv = vaip::mvaip(d);
      vaip::MVPolynomial poly = inv.polynomial;
      vaip::RenderOptions ropts;
      if (o.collapse == "single") {
        poly = vaip::kauffman_link_aip(d);
        ropts.single_variable = true;
      } else if (o.collapse == "N-form") {
        if (d.num_components() < 2) throw vaip::Error("N-form needs at least two components");
        if (!inv.compatible()) throw vaip::Error("N-form needs a compatible diagram");
        poly = vaip::collapse(poly, vaip::Collapse::difference_form(d.num_components()));
        ropts.single_variable = true;
        ropts.symbol_names[static_cast<int>(d.num_components())] = "N";
      }
      if (o.format == "json") {
        nlohmann::json j;
        j["polynomial"] = vaip::to_json(poly);
        j["weights"] = inv.component_weights;
        j["compatible"] = inv.compatible();
        std::cout << j.dump() << "\n";
      } else {
        const auto fmt = o.format == "latex" ? vaip::Format::Latex : vaip::Format::Text;
        std::cout << vaip::render(poly, fmt, ropts) << "\tweights=" << weights_text(inv.component_weights)
                  << "\tcompatible=" << (inv.compatible() ? "true" : "false") << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "line " << r.line << ": " << e.what() << "\n";
      rc = kBadInput;
    }
  }
  return rc;
}

struct FuzzOptions {
  std::string file;
  std::uint64_t seed = 1;
  std::size_t moves = 20;
  std::size_t count = 100;
};

int cmd_fuzz(const FuzzOptions& o) {
  auto in = load(o.file);
  if (!in.ok) return kBadInput;
  std::mt19937_64 seeds(o.seed);
  int rc = kOk;
  for (const auto& r : in.records) {
    if (vaip::has_singular(r.diagram)) {
      std::cerr << "line " << r.line << ": fuzzing needs a classical diagram\n";
      return kBadInput;
    }
    if (o.count == 0) continue;
    const auto expected = vaip::mvaip(r.diagram).polynomial;
    const auto links = vaip::linking_degrees(r.diagram);
    std::size_t mismatches = 0;
    std::size_t applied = 0;
    for (std::size_t t = 0; t < o.count; ++t) {
      const std::uint64_t s = seeds();
      const auto res = vaip::fuzz(r.diagram, s, o.moves);
      applied += res.moves.size();
      const auto got = vaip::mvaip(res.diagram).polynomial;
      const bool same_links = vaip::linking_degrees(res.diagram) == links;
      if (got == expected && same_links) continue;
      ++mismatches;
      std::cout << "MISMATCH line " << r.line << " trial " << t << " seed " << s << "\n"
                << "  start: " << vaip::to_text(r.diagram) << "\n"
                << "  end: " << vaip::to_text(res.diagram) << "\n"
                << "  expected: " << vaip::render(expected) << "\n"
                << "  got: " << vaip::render(got) << "\n";
      if (!same_links) std::cout << "  linking degrees changed\n";
      std::cout << "  trace: " << vaip::format_trace(res.moves) << "\n";
    }
    std::cout << "line " << r.line << ": " << o.count << " trials, " << applied << " moves, "
              << mismatches << " mismatches\n";
    if (mismatches) rc = kFailure;
  }
  return rc;
}

struct ReplayOptions {
  std::string file;
  std::string trace;
};

int cmd_replay(const ReplayOptions& o) {
  auto in = load(o.file);
  if (!in.ok) return kBadInput;
  std::vector<vaip::MoveSpec> moves;
  try {
    moves = vaip::parse_trace(o.trace);
  } catch (const vaip::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  int rc = kOk;
  for (const auto& r : in.records) {
    try {
      const auto end = vaip::replay(r.diagram, moves);
      const auto before = vaip::mvaip(r.diagram).polynomial;
      const auto after = vaip::mvaip(end).polynomial;
      std::cout << vaip::to_text(end) << "\t" << vaip::render(after) << "\t"
                << (before == after ? "MATCH" : "MISMATCH") << "\n";
      if (!(before == after)) rc = kFailure;
    } catch (const vaip::Error& e) {
      std::cerr << "line " << r.line << ": " << e.what() << "\n";
      rc = kBadInput;
    }
  }
  return rc;
}

struct VassilievOptions {
  std::string file;
  std::string pairs = "all";
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

int cmd_vassiliev(const VassilievOptions& o) {
  auto in = load(o.file);
  if (!in.ok) return kBadInput;
  std::mt19937_64 rng(o.seed);
  std::size_t total_checked = 0, total_failures = 0, total_witnesses = 0;
  for (const auto& r : in.records) {
    std::vector<vaip::LinkDiagram> corpus;
    const std::size_t k = vaip::singular_count(r.diagram);
    if (k > 0) {
      corpus.push_back(r.diagram);
    } else {
      auto pairs = vaip::pair_singularizations(r.diagram);
      if (o.pairs == "sample" && o.sample < pairs.size()) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(o.sample);
      }
      auto singles = vaip::single_singularizations(r.diagram);
      corpus.insert(corpus.end(), pairs.begin(), pairs.end());
      corpus.insert(corpus.end(), singles.begin(), singles.end());
    }
    const auto rep = vaip::order_report(corpus);
    std::cout << "line " << r.line << ": checked " << rep.checked << ", failures "
              << rep.failures.size() << ", witnesses " << rep.witnesses.size() << "\n";
    for (const auto& f : rep.failures)
      std::cout << "  FAIL " << vaip::to_text(f.diagram) << "\t" << vaip::render(f.value) << "\n";
    for (const auto& w : rep.witnesses)
      std::cout << "  witness " << vaip::to_text(w.diagram) << "\t" << vaip::render(w.value) << "\n";
    total_checked += rep.checked;
    total_failures += rep.failures.size();
    total_witnesses += rep.witnesses.size();
  }
  if (!in.records.empty())
    std::cout << "total: checked " << total_checked << ", failures " << total_failures
              << ", witnesses " << total_witnesses << "\n";
  return total_failures ? kFailure : kOk;
}

struct ShiftOptions {
  std::string file;
  std::size_t component = 1;
  std::size_t steps = 0;
  bool verify = false;
};

int cmd_shift(const ShiftOptions& o) {
  auto in = load(o.file);
  if (!in.ok) return kBadInput;
  int rc = kOk;
  for (const auto& r : in.records) {
    const vaip::ShiftSpec spec{o.component - 1, o.steps};
    vaip::LinkDiagram shifted;
    vaip::MVPolynomial predicted;
    try {
      shifted = vaip::shift_diagram(r.diagram, spec);
      predicted = vaip::predict(vaip::mvaip(r.diagram), r.diagram, spec);
    } catch (const vaip::Error& e) {
      std::cerr << "line " << r.line << ": " << e.what() << "\n";
      return kBadInput;
    }
    const auto computed = vaip::mvaip(shifted).polynomial;
    const bool match = predicted == computed;
    std::cout << "shifted\t" << vaip::to_text(shifted) << "\n"
              << "predicted\t" << vaip::render(predicted) << "\n"
              << "computed\t" << vaip::render(computed) << "\n"
              << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!match && o.verify) rc = kFailure;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-variable affine index polynomial of virtual links"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Polynomial, weights and compatibility per line");
  c->add_option("file", compute.file, "Input file, - for stdin")->required();
  c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "latex", "json"}));
  c->add_option("--collapse", compute.collapse)->check(CLI::IsMember({"single", "N-form"}));
  c->add_option("--order", compute.order, "New component order, e.g. 2,1");

  FuzzOptions fz;
  auto* f = app.add_subcommand("fuzz", "Random Reidemeister moves; report invariant mismatches");
  f->add_option("file", fz.file)->required();
  f->add_option("--seed", fz.seed);
  f->add_option("--moves", fz.moves);
  f->add_option("--count", fz.count);

  ReplayOptions rp;
  auto* r = app.add_subcommand("replay", "Apply a move trace printed by fuzz");
  r->add_option("file", rp.file)->required();
  r->add_option("--trace", rp.trace)->required();

  VassilievOptions vs;
  std::vector<std::string> pairs_arg{"all"};
  auto* v = app.add_subcommand("vassiliev", "Check order-one behavior on singularizations");
  v->add_option("file", vs.file)->required();
  v->add_option("--pairs", pairs_arg, "all | sample N")->expected(1, 2);
  v->add_option("--seed", vs.seed);

  ShiftOptions sh;
  auto* s = app.add_subcommand("shift", "Move a starting point and predict the new polynomial");
  s->add_option("file", sh.file)->required();
  s->add_option("--component", sh.component, "1-based")->required()->check(CLI::PositiveNumber);
  s->add_option("--steps", sh.steps)->required();
  s->add_flag("--verify", sh.verify, "Exit 1 when prediction and recomputation differ");

  try {
    app.parse(argc, argv);
    if (v->parsed()) {
      vs.pairs = pairs_arg[0];
      if (vs.pairs == "sample") {
        if (pairs_arg.size() != 2) throw CLI::ValidationError("--pairs", "sample needs a count");
        vs.sample = std::stoul(pairs_arg[1]);
      } else if (vs.pairs != "all" || pairs_arg.size() != 1) {
        throw CLI::ValidationError("--pairs", "expected all or sample N");
      }
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (c->parsed()) return cmd_compute(compute);
    if (f->parsed()) return cmd_fuzz(fz);
    if (r->parsed()) return cmd_replay(rp);
    if (v->parsed()) return cmd_vassiliev(vs);
    return cmd_shift(sh);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
