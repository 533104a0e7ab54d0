#include "latrep/family.hpp"

#include <algorithm>

namespace latrep {

UpSetFamily UpSetFamily::of(Poset carrier, std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (Mask m : sets) {
    if (!carrier.is_upset(m)) {
      throw not_an_upset(set_label(carrier, m) + " is not an up-set of the carrier");
    }
  }
  return UpSetFamily{std::move(carrier), std::move(sets)};
}

bool UpSetFamily::contains(Mask m) const {
  return std::binary_search(sets.begin(), sets.end(), m);
}

std::optional<int> UpSetFamily::find(Mask m) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), m);
  if (it == sets.end() || *it != m) return std::nullopt;
  return static_cast<int>(it - sets.begin());
}

int UpSetFamily::index_of(Mask m) const {
  if (auto i = find(m)) return *i;
  throw unknown_element(set_label(carrier, m) + " is not in the family");
}

bool UpSetFamily::intersection_closed() const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!contains(sets[i] & sets[j])) return false;
    }
  }
  return true;
}

bool UpSetFamily::union_closed() const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!contains(sets[i] | sets[j])) return false;
    }
  }
  return true;
}

Lattice family_lattice(const UpSetFamily& fam) {
  const int n = fam.size();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(fam.label(i));

  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // i <= j in the lattice iff sets[i] ⊇ sets[j].
      if (subset(fam.sets[static_cast<std::size_t>(j)], fam.sets[static_cast<std::size_t>(i)])) {
        up[static_cast<std::size_t>(i)] |= bit(j);
      }
    }
  }
  Lattice l = Lattice::from_poset(Poset::from_relation(std::move(names), std::move(up)));

  if (fam.complete()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Mask want_meet = fam.sets[static_cast<std::size_t>(i)] | fam.sets[static_cast<std::size_t>(j)];
        Mask want_join = fam.sets[static_cast<std::size_t>(i)] & fam.sets[static_cast<std::size_t>(j)];
        if (fam.sets[static_cast<std::size_t>(l.meet(i, j))] != want_meet ||
            fam.sets[static_cast<std::size_t>(l.join(i, j))] != want_join) {
          throw internal_disagreement(
              "meet/join of a complete up-set family differ from union/intersection at " +
              fam.label(i) + ", " + fam.label(j));
        }
      }
    }
  }
  return l;
}

}  // namespace latrep
