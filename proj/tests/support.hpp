#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vaip/diagram.hpp"
#include "vaip/gauss.hpp"

namespace support {

inline std::vector<vaip::LinkDiagram> load_corpus() {
  std::ifstream in(VAIP_TEST_DATA "/corpus.txt");
  if (!in) throw std::runtime_error("corpus.txt not found");
  std::vector<vaip::LinkDiagram> out;
  for (const auto& line : vaip::read_batch(in)) out.push_back(vaip::parse(line.text));
  return out;
}

/// Uniformly scattered passes: every valid diagram with these counts can
/// come out. singular_rate is the chance that a crossing is a double point.
inline vaip::LinkDiagram random_diagram(std::mt19937_64& rng, std::size_t components,
                                        int crossings, double singular_rate = 0.0) {
  std::uniform_int_distribution<std::size_t> comp(0, components - 1);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution singular(singular_rate);
  vaip::LinkDiagram d;
  d.components.resize(components);
  for (int id = 1; id <= crossings; ++id) {
    const int s = coin(rng) ? 1 : -1;
    const bool sing = singular(rng);
    d.components[comp(rng)].passes.push_back(sing ? vaip::Pass::singular_left(id)
                                                  : vaip::Pass::over(id, s));
    d.components[comp(rng)].passes.push_back(sing ? vaip::Pass::singular_right(id)
                                                  : vaip::Pass::under(id, s));
  }
  for (auto& c : d.components) std::shuffle(c.passes.begin(), c.passes.end(), rng);
  return d;
}

inline std::vector<vaip::LinkDiagram> random_corpus(std::uint64_t seed, std::size_t count,
                                                    int max_crossings) {
  std::mt19937_64 rng(seed);
  std::vector<vaip::LinkDiagram> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t comps = 1 + i % 3;
    const int m = std::uniform_int_distribution<int>(1, max_crossings)(rng);
    out.push_back(random_diagram(rng, comps, m));
  }
  return out;
}

}  // namespace support
