#pragma once

#include <random>
#include <vector>

#include "latrep/fuzzy.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"
#include "latrep/quotient.hpp"

namespace latrep {

// Seeded generators for the property corpora. All output is a deterministic
// function of the RNG state.

// A random poset on n labeled elements: random upper-triangular edges,
// transitively closed.
Poset random_poset(int n, std::mt19937_64& rng);

// A random monotone map into `l`: walk a linear extension of x, assigning
// each element a uniformly random value above the join of the values below
// it.
FuzzyUpSet random_monotone_map(const Poset& x, const Lattice& l, std::mt19937_64& rng);

// A random monotonic operator: walk a linear extension top-down, assigning
// each element a random superset of the union of the values above it.
MonotonicOperator random_monotone_operator(const Poset& x, std::mt19937_64& rng);

// Every lattice arising from enumerate_posets(1..max_elements), in generator
// order.
std::vector<Lattice> corpus_lattices(int max_elements);

}  // namespace latrep
