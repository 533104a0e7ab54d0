#include "latrep/operator_classes.hpp"

#include <algorithm>
#include <map>

namespace latrep {

bool are_equivalent(const MonotonicOperator& g1, const MonotonicOperator& g2, int cap) {
  if (!g1.carrier().same_structure(g2.carrier())) {
    throw carrier_mismatch("operators live on different carriers");
  }
  return operator_family(g1, cap).sets == operator_family(g2, cap).sets;
}

MonotonicOperator canonical_operator(const UpSetFamily& family, int cap) {
  if (!family.complete()) {
    throw precondition_failed(
        "the canonical operator needs a family containing the empty set and the carrier, closed "
        "under union and intersection");
  }
  const Poset& x = family.carrier;
  std::vector<Mask> assign(static_cast<std::size_t>(x.size()), 0);
  for (int e = 0; e < x.size(); ++e) {
    Mask inter = x.all();
    for (Mask s : family.sets) {
      if (has_bit(s, e)) inter &= s;
    }
    assign[static_cast<std::size_t>(e)] = inter;
  }
  MonotonicOperator g(x, std::move(assign));
  if (operator_family(g, cap).sets != family.sets) {
    throw verification_failed("the canonical operator does not expand back to its family");
  }
  return g;
}

OperatorClassLattice class_lattice(const Lattice& l, int family_cap, bool force) {
  if (!distributivity(l).holds && !force) {
    throw precondition_failed(
        "the class lattice is only asserted for finite distributive lattices (use force to "
        "explore anyway)");
  }

  OperatorClassLattice out;
  out.asserted = distributivity(l).holds;
  out.irreducibles = irreducible_poset(l);

  UpsetLattice f = upset_lattice(out.irreducibles, kDefaultElementCap);
  if (f.family.size() > family_cap) {
    throw cap_exceeded("F_{M(L)} has " + std::to_string(f.family.size()) +
                       " up-sets, above the cap of " + std::to_string(family_cap));
  }

  auto families = complete_sublattice_families(f.family);
  const int k = static_cast<int>(families.size());
  for (const auto& indices : families) {
    std::vector<Mask> sets;
    sets.reserve(indices.size());
    for (int i : indices) sets.push_back(f.family.sets[static_cast<std::size_t>(i)]);
    out.families.push_back(UpSetFamily::of(out.irreducibles, sets));
    out.representatives.push_back(canonical_operator(out.families.back()));
  }

  // Classes ordered by inclusion of their families.
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) names.push_back("C" + std::to_string(i));
  std::vector<Mask> up(static_cast<std::size_t>(k), 0);
  auto includes = [&](int a, int b) {  // families[a] ⊆ families[b]
    return std::includes(out.families[static_cast<std::size_t>(b)].sets.begin(),
                         out.families[static_cast<std::size_t>(b)].sets.end(),
                         out.families[static_cast<std::size_t>(a)].sets.begin(),
                         out.families[static_cast<std::size_t>(a)].sets.end());
  };
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (includes(a, b)) up[static_cast<std::size_t>(a)] |= bit(b);
    }
  }
  out.order = Lattice::from_poset(Poset::from_relation(std::move(names), std::move(up)));

  // Constructive meet (intersection) and join (union-closure), cross-checked
  // against the enumerated order's glb/lub.
  std::map<std::vector<Mask>, int> index;
  for (int i = 0; i < k; ++i) index.emplace(out.families[static_cast<std::size_t>(i)].sets, i);
  auto family_index = [&](const std::vector<Mask>& sets) {
    auto it = index.find(sets);
    if (it == index.end()) {
      throw internal_disagreement("a combined class family is not itself a class");
    }
    return it->second;
  };

  out.meet_table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), -1);
  out.join_table = out.meet_table;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const auto& fa = out.families[static_cast<std::size_t>(a)].sets;
      const auto& fb = out.families[static_cast<std::size_t>(b)].sets;

      std::vector<Mask> inter;
      std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(inter));
      int m = family_index(inter);

      std::vector<Mask> uni;
      std::set_union(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(uni));
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t i = 0; i < uni.size(); ++i) {
          for (std::size_t j = i + 1; j < uni.size(); ++j) {
            for (Mask candidate : {uni[i] | uni[j], uni[i] & uni[j]}) {
              if (!std::binary_search(uni.begin(), uni.end(), candidate)) {
                uni.insert(std::upper_bound(uni.begin(), uni.end(), candidate), candidate);
                grew = true;
              }
            }
          }
        }
      }
      int s = family_index(uni);

      if (m != out.order.meet(a, b) || s != out.order.join(a, b)) {
        throw internal_disagreement("constructive class meet/join disagree with the class order");
      }
      out.meet_table[static_cast<std::size_t>(a * k + b)] = m;
      out.join_table[static_cast<std::size_t>(a * k + b)] = s;
    }
  }
  return out;
}

}  // namespace latrep
