#include "latrep/corpus.hpp"

#include <algorithm>

namespace latrep {

Poset random_poset(int n, std::mt19937_64& rng) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::bernoulli_distribution edge(0.4);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) pairs.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    }
  }
  return Poset::from_pairs(std::move(names), pairs);
}

FuzzyUpSet random_monotone_map(const Poset& x, const Lattice& l, std::mt19937_64& rng) {
  std::vector<int> values(static_cast<std::size_t>(x.size()), l.bottom());
  for (int e : linear_extension(x)) {
    int floor_value = l.bottom();
    for (int y : bits_of(x.strict_down(e))) {
      floor_value = l.join(floor_value, values[static_cast<std::size_t>(y)]);
    }
    std::vector<int> candidates = bits_of(l.order().up(floor_value));
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    values[static_cast<std::size_t>(e)] = candidates[pick(rng)];
  }
  return FuzzyUpSet(x, l, std::move(values));
}

MonotonicOperator random_monotone_operator(const Poset& x, std::mt19937_64& rng) {
  std::vector<Mask> assign(static_cast<std::size_t>(x.size()), 0);
  std::vector<int> ext = linear_extension(x);
  std::reverse(ext.begin(), ext.end());
  std::uniform_int_distribution<Mask> extra(0, x.all());
  for (int e : ext) {
    Mask floor_set = 0;
    for (int y : bits_of(x.strict_up(e))) floor_set |= assign[static_cast<std::size_t>(y)];
    assign[static_cast<std::size_t>(e)] = floor_set | (extra(rng) & x.all());
  }
  return MonotonicOperator(x, std::move(assign));
}

std::vector<Lattice> corpus_lattices(int max_elements) {
  std::vector<Lattice> out;
  for (int n = 1; n <= max_elements; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      try {
        out.push_back(Lattice::from_poset(p));
      } catch (const not_a_lattice&) {
      }
    }
  }
  return out;
}

}  // namespace latrep
