#include "latrep/fuzzy.hpp"

#include <algorithm>

namespace latrep {

FuzzyUpSet::FuzzyUpSet(Poset domain, Lattice codomain, std::vector<int> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != domain_.size()) {
    throw error("fuzzy up-set must assign a value to every domain element");
  }
  for (int v : values_) {
    if (v < 0 || v >= codomain_.size()) throw unknown_element("fuzzy value index out of range");
  }
  for (int x = 0; x < domain_.size(); ++x) {
    for (int y : bits_of(domain_.strict_up(x))) {
      if (!codomain_.leq(values_[static_cast<std::size_t>(x)],
                         values_[static_cast<std::size_t>(y)])) {
        throw not_monotone("map is not monotone: " + domain_.name(x) + " <= " + domain_.name(y) +
                           " but values are not ordered");
      }
    }
  }
}

Mask cut(const FuzzyUpSet& mu, int p) {
  if (p < 0 || p >= mu.codomain().size()) throw unknown_element("cut level out of range");
  Mask out = 0;
  for (int x = 0; x < mu.domain().size(); ++x) {
    if (mu.codomain().leq(p, mu.value(x))) out |= bit(x);
  }
  return out;
}

UpSetFamily cut_family(const FuzzyUpSet& mu) {
  std::vector<Mask> cuts;
  cuts.reserve(static_cast<std::size_t>(mu.codomain().size()));
  for (int p = 0; p < mu.codomain().size(); ++p) cuts.push_back(cut(mu, p));
  return UpSetFamily::of(mu.domain(), std::move(cuts));
}

MeetClosure image_meet_closure(const FuzzyUpSet& mu) {
  Mask closure = bit(mu.codomain().top());  // the empty meet
  for (int v : mu.values()) closure |= bit(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : bits_of(closure)) {
      for (int b : bits_of(closure)) {
        int m = mu.codomain().meet(a, b);
        if (!has_bit(closure, m)) {
          closure |= bit(m);
          grew = true;
        }
      }
    }
  }
  MeetClosure out{Lattice::from_poset(subposet(mu.codomain().order(), closure)),
                  bits_of(closure)};
  return out;
}

FuzzyUpSet canonical_fuzzy_upset(const UpSetFamily& family) {
  if (!family.has_full()) {
    throw missing_full_set("the family must contain the full carrier");
  }
  if (!family.intersection_closed()) {
    throw not_intersection_closed("the family must be closed under intersections");
  }
  const Poset& x = family.carrier;
  Lattice f = family_lattice(family);

  std::vector<int> values(static_cast<std::size_t>(x.size()), 0);
  for (int e = 0; e < x.size(); ++e) {
    Mask inter = x.all();
    for (Mask s : family.sets) {
      if (has_bit(s, e)) inter &= s;
    }
    values[static_cast<std::size_t>(e)] = family.index_of(inter);
  }
  FuzzyUpSet mu(x, std::move(f), std::move(values));

  for (int p = 0; p < family.size(); ++p) {
    if (cut(mu, p) != family.sets[static_cast<std::size_t>(p)]) {
      throw cut_mismatch("canonical map violates p = p-cut at " + family.label(p));
    }
  }
  if (!(cut_family(mu) == family)) {
    throw cut_mismatch("the cut family of the canonical map differs from the input family");
  }
  return mu;
}

CutCompletenessReport cuts_are_all_upsets(const FuzzyUpSet& mu, int cap) {
  const Poset& x = mu.domain();
  const Lattice& l = mu.codomain();
  if (x.size() > cap) {
    throw cap_exceeded("cut completeness scan over " + std::to_string(x.size()) +
                       " elements exceeds the cap of " + std::to_string(cap));
  }

  CutCompletenessReport report;
  // Subset condition, scanned over families of domain elements including the
  // empty one (whose meet is the top). Antichains suffice: a family and its
  // minimal elements have the same value meet and the same conclusion.
  const Mask full = x.all();
  for (Mask fam = 0; report.holds; ++fam) {
    if (x.is_antichain(fam)) {
      Mask vals = 0;
      for (int i : bits_of(fam)) vals |= bit(mu.value(i));
      int bound = l.meet_over(vals);
      for (int e = 0; e < x.size(); ++e) {
        if (!l.leq(bound, mu.value(e))) continue;
        if ((x.down(e) & fam) == 0) {
          report = {false, e, fam};
          break;
        }
      }
    }
    if (fam == full) break;
  }

  bool all_cuts = cut_family(mu).sets == all_upsets(x, cap);
  if (all_cuts != report.holds) {
    throw internal_disagreement(
        "cut completeness legs disagree: subset condition says " +
        std::string(report.holds ? "yes" : "no") + ", cut enumeration says " +
        std::string(all_cuts ? "yes" : "no"));
  }
  return report;
}

bool image_in_irreducibles(const FuzzyUpSet& mu, int cap) {
  if (!cuts_are_all_upsets(mu, cap).holds) {
    throw precondition_failed("image_in_irreducibles requires the cuts to be all up-sets");
  }
  MeetClosure mc = image_meet_closure(mu);
  Mask irr = meet_irreducibles(mc.lattice);
  for (int e = 0; e < mu.domain().size(); ++e) {
    auto it = std::lower_bound(mc.members.begin(), mc.members.end(), mu.value(e));
    int idx = static_cast<int>(it - mc.members.begin());
    if (!has_bit(irr, idx)) return false;
  }
  return true;
}

}  // namespace latrep
