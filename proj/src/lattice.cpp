#include "latrep/lattice.hpp"

#include <algorithm>
#include <string>

namespace latrep {

namespace {

// The greatest element of `candidates` under p, or -1.
int greatest_in(const Poset& p, Mask candidates) {
  for (int m : bits_of(candidates)) {
    if (subset(candidates, p.down(m))) return m;
  }
  return -1;
}

int least_in(const Poset& p, Mask candidates) {
  for (int m : bits_of(candidates)) {
    if (subset(candidates, p.up(m))) return m;
  }
  return -1;
}

}  // namespace

Lattice Lattice::from_poset(Poset order) {
  const int n = order.size();
  if (n == 0) throw not_a_lattice("a lattice needs at least one element");

  Lattice l;
  l.table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  l.jtable_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int glb = greatest_in(order, order.down(i) & order.down(j));
      if (glb < 0) {
        throw not_a_lattice("elements '" + order.name(i) + "' and '" + order.name(j) +
                            "' have no greatest lower bound");
      }
      int lub = least_in(order, order.up(i) & order.up(j));
      if (lub < 0) {
        throw not_a_lattice("elements '" + order.name(i) + "' and '" + order.name(j) +
                            "' have no least upper bound");
      }
      l.table_[static_cast<std::size_t>(i * n + j)] = glb;
      l.table_[static_cast<std::size_t>(j * n + i)] = glb;
      l.jtable_[static_cast<std::size_t>(i * n + j)] = lub;
      l.jtable_[static_cast<std::size_t>(j * n + i)] = lub;
    }
  }
  int bottom = 0;
  int top = 0;
  for (int i = 1; i < n; ++i) {
    bottom = l.table_[static_cast<std::size_t>(bottom * n + i)];
    top = l.jtable_[static_cast<std::size_t>(top * n + i)];
  }
  l.bottom_ = bottom;
  l.top_ = top;
  l.order_ = std::move(order);
  return l;
}

int Lattice::meet_over(Mask m) const {
  int acc = top_;
  for (int i : bits_of(m)) acc = meet(acc, i);
  return acc;
}

int Lattice::join_over(Mask m) const {
  int acc = bottom_;
  for (int i : bits_of(m)) acc = join(acc, i);
  return acc;
}

Mask meet_irreducibles(const Lattice& l) {
  Mask out = 0;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    if (l.meet_over(l.order().strict_up(x)) != x) out |= bit(x);
  }
  return out;
}

Poset irreducible_poset(const Lattice& l) { return subposet(l.order(), meet_irreducibles(l)); }

DistributivityReport distributivity(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return {false, x, y, z};
        }
      }
    }
  }
  return {};
}

DecompositionReport meet_decomposition(const Lattice& l) {
  Mask m = meet_irreducibles(l);
  for (int r = 0; r < l.size(); ++r) {
    Mask above = m & l.order().up(r);
    if (l.meet_over(above) != r) return {false, r};
  }
  return {};
}

MeetPrimeReport meet_prime_condition(const Lattice& l, int cap) {
  std::vector<int> irr = bits_of(meet_irreducibles(l));
  const int m = static_cast<int>(irr.size());
  if (m > cap) {
    throw cap_exceeded("meet-prime scan over " + std::to_string(m) +
                       " irreducibles exceeds the cap of " + std::to_string(cap));
  }

  // meets[s] = meet of the irreducibles selected by subset mask s.
  std::vector<int> meets(std::size_t{1} << m, l.top());
  std::vector<Mask> order(std::size_t{1} << m);
  for (Mask s = 0; s < (Mask{1} << m); ++s) order[static_cast<std::size_t>(s)] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });

  for (Mask s : order) {
    if (s == 0) continue;
    int low = lowest_bit(s);
    meets[static_cast<std::size_t>(s)] =
        l.meet(meets[static_cast<std::size_t>(s & (s - 1))], irr[static_cast<std::size_t>(low)]);
    int bound = meets[static_cast<std::size_t>(s)];
    for (int q : irr) {
      if (!l.leq(bound, q)) continue;
      bool covered = false;
      for (int pbit : bits_of(s)) {
        if (l.leq(irr[static_cast<std::size_t>(pbit)], q)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        Mask family = 0;
        for (int pbit : bits_of(s)) family |= bit(irr[static_cast<std::size_t>(pbit)]);
        return {false, q, family};
      }
    }
  }
  return {};
}

bool is_atomic_boolean(const Lattice& l) {
  if (!distributivity(l).holds) return false;
  Mask atoms = l.order().covers_up(l.bottom());
  for (int x = 0; x < l.size(); ++x) {
    if (l.join_over(atoms & l.order().down(x)) != x) return false;
    bool complemented = false;
    for (int y = 0; y < l.size() && !complemented; ++y) {
      complemented = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    }
    if (!complemented) return false;
  }
  return true;
}

ChainGradingReport graded_chains(const Lattice& l, int cap) {
  if (!distributivity(l).holds || !meet_decomposition(l).holds ||
      !meet_prime_condition(l).holds) {
    throw precondition_failed(
        "chain grading requires a distributive lattice with meet decomposition and the "
        "meet-prime condition");
  }
  ChainGradingReport report;
  report.expected = popcount(meet_irreducibles(l)) + 1;
  for (auto& chain : maximal_chains(l.order(), cap)) {
    if (static_cast<int>(chain.size()) != report.expected) {
      report.holds = false;
      report.witness = chain;
      return report;
    }
  }
  return report;
}

bool is_sublattice_carrier(const Lattice& l, Mask subset_mask) {
  for (int a : bits_of(subset_mask)) {
    for (int b : bits_of(subset_mask)) {
      if (!has_bit(subset_mask, l.meet(a, b)) || !has_bit(subset_mask, l.join(a, b))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace latrep
