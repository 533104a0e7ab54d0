#include "latrep/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace latrep {

MonotonicOperator::MonotonicOperator(Poset carrier, std::vector<Mask> assign)
    : carrier_(std::move(carrier)), assign_(std::move(assign)) {
  if (static_cast<int>(assign_.size()) != carrier_.size()) {
    throw error("operator must assign a set to every element");
  }
  for (Mask m : assign_) {
    if (!subset(m, carrier_.all())) throw unknown_element("operator value is out of range");
  }
  for (int x = 0; x < carrier_.size(); ++x) {
    for (int y : bits_of(carrier_.strict_up(x))) {
      if (!subset(assign_[static_cast<std::size_t>(y)], assign_[static_cast<std::size_t>(x)])) {
        throw not_monotone("operator is not monotonic: " + carrier_.name(x) + " <= " +
                           carrier_.name(y) + " but values are not reverse-ordered");
      }
    }
  }
}

QuotientPoset quotient(const MonotonicOperator& g) {
  const Poset& x = g.carrier();
  QuotientPoset q;
  q.base = x;
  q.class_of.assign(static_cast<std::size_t>(x.size()), -1);

  std::map<Mask, int> by_value;  // G-value -> class index, classes in least-rep order
  std::vector<int> reps;
  for (int e = 0; e < x.size(); ++e) {
    auto [it, inserted] = by_value.emplace(g.at(e), static_cast<int>(reps.size()));
    if (inserted) {
      reps.push_back(e);
      q.members.push_back(0);
      q.values.push_back(g.at(e));
    }
    q.class_of[static_cast<std::size_t>(e)] = it->second;
    q.members[static_cast<std::size_t>(it->second)] |= bit(e);
  }

  const int k = static_cast<int>(reps.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) names.push_back("[" + x.name(reps[static_cast<std::size_t>(c)]) + "]");
  std::vector<Mask> up(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      // [a] <= [b] iff G(a) ⊇ G(b).
      if (subset(q.values[static_cast<std::size_t>(b)], q.values[static_cast<std::size_t>(a)])) {
        up[static_cast<std::size_t>(a)] |= bit(b);
      }
    }
  }
  q.classes = Poset::from_relation(std::move(names), std::move(up));
  return q;
}

UpSetFamily operator_family(const MonotonicOperator& g, int cap) {
  QuotientPoset q = quotient(g);
  std::vector<Mask> expanded;
  for (Mask t : all_upsets(q.classes, cap)) {
    Mask s = 0;
    for (int c : bits_of(t)) s |= q.members[static_cast<std::size_t>(c)];
    expanded.push_back(s);
  }
  return UpSetFamily::of(g.carrier(), std::move(expanded));
}

EmbeddingWitness embedded_family(const MonotonicOperator& g, int cap) {
  const Poset& x = g.carrier();
  QuotientPoset q = quotient(g);

  EmbeddingWitness w;
  w.host = UpSetFamily::of(x, all_upsets(x, cap));
  w.quotient_sets = all_upsets(q.classes, cap);
  for (Mask t : w.quotient_sets) {
    Mask s = 0;
    for (int c : bits_of(t)) s |= q.members[static_cast<std::size_t>(c)];
    w.expanded.push_back(s);
  }
  std::vector<Mask> image = w.expanded;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  // T -> S_T must be injective, so the image has the same size.
  if (image.size() != w.quotient_sets.size()) {
    throw internal_disagreement("the class-expansion map is not injective");
  }
  for (Mask s : image) {
    if (!x.is_upset(s)) {
      throw internal_disagreement(set_label(x, s) + " expanded from a quotient up-set is not an up-set");
    }
  }
  w.image = UpSetFamily::of(x, std::move(image));
  if (!w.image.has_empty() || !w.image.has_full()) {
    throw internal_disagreement("the expanded family is missing the empty set or the carrier");
  }
  if (!w.image.intersection_closed() || !w.image.union_closed()) {
    throw internal_disagreement("the expanded family is not closed under union/intersection");
  }
  // Order isomorphism both ways: T1 ⊇ T2 iff S_T1 ⊇ S_T2.
  for (std::size_t i = 0; i < w.quotient_sets.size(); ++i) {
    for (std::size_t j = 0; j < w.quotient_sets.size(); ++j) {
      if (subset(w.quotient_sets[i], w.quotient_sets[j]) != subset(w.expanded[i], w.expanded[j])) {
        throw internal_disagreement("class expansion does not preserve the family order");
      }
    }
  }
  return w;
}

std::vector<std::vector<int>> complete_sublattice_families(const UpSetFamily& all) {
  const int n = all.size();
  if (n > 64) throw cap_exceeded("sublattice enumeration over more than 64 up-sets");
  if (!all.complete()) throw precondition_failed("sublattice enumeration needs a complete family");

  // Union/intersection tables over family indices.
  std::vector<std::vector<int>> uni(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> inter = uni;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      uni[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          all.index_of(all.sets[static_cast<std::size_t>(i)] | all.sets[static_cast<std::size_t>(j)]);
      inter[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          all.index_of(all.sets[static_cast<std::size_t>(i)] & all.sets[static_cast<std::size_t>(j)]);
    }
  }

  auto close = [&](Mask fam) {
    bool grew = true;
    while (grew) {
      grew = false;
      auto members = bits_of(fam);
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          Mask add = bit(uni[static_cast<std::size_t>(members[a])][static_cast<std::size_t>(members[b])]) |
                     bit(inter[static_cast<std::size_t>(members[a])][static_cast<std::size_t>(members[b])]);
          if (!subset(add, fam)) {
            fam |= add;
            grew = true;
          }
        }
      }
    }
    return fam;
  };

  // Grow every closed family from {empty, full} by adding one member and
  // reclosing; each closed family is reached this way.
  Mask seed = bit(all.index_of(0)) | bit(all.index_of(all.carrier.all()));
  std::unordered_set<Mask> seen{seed};
  std::vector<Mask> frontier{seed};
  std::vector<Mask> found{seed};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask fam : frontier) {
      for (int u = 0; u < n; ++u) {
        if (has_bit(fam, u)) continue;
        Mask grown = close(fam | bit(u));
        if (seen.insert(grown).second) {
          next.push_back(grown);
          found.push_back(grown);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (Mask fam : found) out.push_back(bits_of(fam));
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

// The canonical operator of a family over a poset: x -> intersection of the
// members containing x. Requires the full carrier in the family.
MonotonicOperator intersection_operator(const Poset& x, const std::vector<Mask>& sets) {
  std::vector<Mask> assign(static_cast<std::size_t>(x.size()), 0);
  for (int e = 0; e < x.size(); ++e) {
    Mask inter = x.all();
    for (Mask s : sets) {
      if (has_bit(s, e)) inter &= s;
    }
    assign[static_cast<std::size_t>(e)] = inter;
  }
  return MonotonicOperator(x, std::move(assign));
}

}  // namespace

std::optional<std::vector<int>> direct_embedding_search(const Lattice& l0, const Lattice& host) {
  const int n0 = l0.size();
  const int n1 = host.size();
  if (n0 > n1) return std::nullopt;

  std::vector<int> map(static_cast<std::size_t>(n0), -1);
  std::vector<char> used(static_cast<std::size_t>(n1), 0);

  auto candidate_ok = [&](int i, int v) {
    if (i == l0.bottom() && v != host.bottom()) return false;
    if (i == l0.top() && v != host.top()) return false;
    // An embedding preserves and reflects order, and down/up-set sizes can
    // only grow.
    if (popcount(l0.order().down(i)) > popcount(host.order().down(v))) return false;
    if (popcount(l0.order().up(i)) > popcount(host.order().up(v))) return false;
    for (int j = 0; j < i; ++j) {
      int w = map[static_cast<std::size_t>(j)];
      if (l0.leq(i, j) != host.leq(v, w) || l0.leq(j, i) != host.leq(w, v)) return false;
      // Meets and joins whose result is already placed must match now;
      // the rest is settled by the leaf check.
      int m = l0.meet(i, j);
      int s = l0.join(i, j);
      int hm = host.meet(v, w);
      int hs = host.join(v, w);
      if (m == i ? hm != v : (m < i && hm != map[static_cast<std::size_t>(m)])) return false;
      if (s == i ? hs != v : (s < i && hs != map[static_cast<std::size_t>(s)])) return false;
    }
    return true;
  };

  auto full_check = [&]() {
    for (int a = 0; a < n0; ++a) {
      for (int b = 0; b < n0; ++b) {
        if (map[static_cast<std::size_t>(l0.meet(a, b))] !=
                host.meet(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ||
            map[static_cast<std::size_t>(l0.join(a, b))] !=
                host.join(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) {
          return false;
        }
      }
    }
    return map[static_cast<std::size_t>(l0.bottom())] == host.bottom() &&
           map[static_cast<std::size_t>(l0.top())] == host.top();
  };

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n0) return full_check();
    for (int v = 0; v < n1; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (!candidate_ok(i, v)) continue;
      map[static_cast<std::size_t>(i)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      if (place(i + 1)) return true;
      map[static_cast<std::size_t>(i)] = -1;
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

EmbeddingVerdict decide_embedding(const Lattice& l0, const Lattice& host, int family_cap,
                                  int element_cap, int irr_cap) {
  RepresentationVerdict r0 = upset_representation(l0, element_cap, irr_cap);
  RepresentationVerdict rh = upset_representation(host, element_cap, irr_cap);
  if (!r0.representable || !rh.representable) {
    throw precondition_failed("embedding decisions require representable lattices on both sides");
  }

  UpsetLattice f = upset_lattice(rh.irreducibles, element_cap);
  if (f.family.size() > family_cap) {
    throw cap_exceeded("F_{M(L)} has " + std::to_string(f.family.size()) +
                       " up-sets, above the cap of " + std::to_string(family_cap));
  }

  EmbeddingVerdict verdict;
  for (const auto& fam_indices : complete_sublattice_families(f.family)) {
    std::vector<Mask> sets;
    sets.reserve(fam_indices.size());
    for (int i : fam_indices) sets.push_back(f.family.sets[static_cast<std::size_t>(i)]);
    MonotonicOperator g = intersection_operator(rh.irreducibles, sets);
    UpsetLattice fq = upset_lattice(quotient(g).classes, element_cap);
    if (auto iso = poset_isomorphism(l0.order(), fq.lattice.order())) {
      verdict.operator_leg = true;
      verdict.witness = g;
      verdict.witness_family = fam_indices;
      verdict.iso = *iso;
      break;
    }
  }

  verdict.direct = direct_embedding_search(l0, host);
  verdict.direct_leg = verdict.direct.has_value();

  if (verdict.operator_leg != verdict.direct_leg) {
    throw internal_disagreement(
        "embedding legs disagree: operator search says " +
        std::string(verdict.operator_leg ? "yes" : "no") + ", direct search says " +
        std::string(verdict.direct_leg ? "yes" : "no"));
  }
  verdict.embeds = verdict.operator_leg;
  return verdict;
}

MonotonicOperator boolean_embedding_operator(const Lattice& host, const UpSetFamily& family,
                                             int cap) {
  if (!is_atomic_boolean(host)) {
    throw precondition_failed("the construction requires an atomic boolean lattice");
  }
  Poset mp = irreducible_poset(host);
  if (!family.carrier.same_structure(mp)) {
    throw carrier_mismatch("the family must live over (M(L), <=)");
  }
  if (family.size() < 2) {
    throw precondition_failed("the family must represent a non-trivial lattice");
  }
  if (!family.intersection_closed() || !family.union_closed()) {
    throw precondition_failed("the family must be a sublattice of the powerset of M(L)");
  }

  // Shift so the top of the family becomes the empty set.
  Mask family_top = family.sets.front();
  for (Mask s : family.sets) family_top &= s;
  std::vector<Mask> shifted;
  shifted.reserve(family.sets.size());
  for (Mask s : family.sets) shifted.push_back(s & ~family_top);
  std::sort(shifted.begin(), shifted.end());

  Mask shifted_bottom = 0;
  for (Mask s : shifted) shifted_bottom |= s;

  // Canonical values on the bottom of the shifted family.
  std::vector<Mask> assign(static_cast<std::size_t>(mp.size()), 0);
  auto value_at = [&](int e) {
    Mask inter = mp.all();
    for (Mask s : shifted) {
      if (has_bit(s, e)) inter &= s;
    }
    return inter;
  };
  const int w = lowest_bit(shifted_bottom);
  for (int e = 0; e < mp.size(); ++e) {
    assign[static_cast<std::size_t>(e)] = has_bit(shifted_bottom, e) ? value_at(e) : value_at(w);
  }
  MonotonicOperator g(mp, std::move(assign));

  // The construction promises (family, ⊇) ≅ F_{M(L)/G}.
  UpsetLattice fq = upset_lattice(quotient(g).classes, cap);
  Lattice family_as_lattice = family_lattice(family);
  if (!poset_isomorphism(family_as_lattice.order(), fq.lattice.order())) {
    throw verification_failed("the boolean embedding operator does not realize the family");
  }
  return g;
}

}  // namespace latrep
