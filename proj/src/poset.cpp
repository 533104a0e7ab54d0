#include "latrep/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace latrep {

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(lowest_bit(m));
    m &= m - 1;
  }
  return out;
}

namespace {

void check_names(const std::vector<std::string>& names) {
  if (names.size() > 64) throw cap_exceeded("posets are limited to 64 elements");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw invalid_name("empty element name");
    for (char c : n) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw invalid_name("element name '" + n + "' contains whitespace");
      }
    }
    if (!seen.insert(n).second) throw duplicate_name("duplicate element name '" + n + "'");
  }
}

// Shortest directed path a -> b over the raw pair edges, as index list.
std::vector<int> raw_path(const std::vector<std::vector<int>>& adj, int a, int b) {
  std::vector<int> prev(adj.size(), -1);
  std::queue<int> q;
  q.push(a);
  std::vector<char> seen(adj.size(), 0);
  seen[static_cast<std::size_t>(a)] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == b) break;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        prev[static_cast<std::size_t>(v)] = u;
        q.push(v);
      }
    }
  }
  std::vector<int> path;
  for (int v = b; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset Poset::from_pairs(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  check_names(names);
  const int n = static_cast<int>(names.size());
  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < n; ++i) index.emplace(names[static_cast<std::size_t>(i)], i);

  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = bit(i);
  for (const auto& [lo, hi] : pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw unknown_element("unknown element '" + lo + "' in relation");
    if (b == index.end()) throw unknown_element("unknown element '" + hi + "' in relation");
    up[static_cast<std::size_t>(a->second)] |= bit(b->second);
    adj[static_cast<std::size_t>(a->second)].push_back(b->second);
  }

  // Transitive closure (Warshall over mask rows).
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (has_bit(up[static_cast<std::size_t>(i)], k)) {
        up[static_cast<std::size_t>(i)] |= up[static_cast<std::size_t>(k)];
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (has_bit(up[static_cast<std::size_t>(i)], j) && has_bit(up[static_cast<std::size_t>(j)], i)) {
        auto fwd = raw_path(adj, i, j);
        auto back = raw_path(adj, j, i);
        std::ostringstream msg;
        msg << "antisymmetry violation, witness cycle:";
        for (std::size_t k = 0; k < fwd.size(); ++k) msg << ' ' << names[static_cast<std::size_t>(fwd[k])];
        for (std::size_t k = 1; k < back.size(); ++k) msg << ' ' << names[static_cast<std::size_t>(back[k])];
        throw cycle_detected(msg.str());
      }
    }
  }

  Poset p;
  p.names_ = std::move(names);
  p.up_ = std::move(up);
  p.finish();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<Mask> ups) {
  check_names(names);
  const int n = static_cast<int>(names.size());
  if (ups.size() != names.size()) throw error("relation size does not match element count");
  const Mask full = (n == 64) ? ~Mask{0} : (bit(n) - 1);
  for (int i = 0; i < n; ++i) {
    if (!has_bit(ups[static_cast<std::size_t>(i)], i)) throw error("relation is not reflexive");
    if ((ups[static_cast<std::size_t>(i)] & ~full) != 0) {
      throw error("relation mentions out-of-range elements");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j : bits_of(ups[static_cast<std::size_t>(i)])) {
      if (i != j && has_bit(ups[static_cast<std::size_t>(j)], i)) {
        throw cycle_detected("antisymmetry violation between '" + names[static_cast<std::size_t>(i)] +
                             "' and '" + names[static_cast<std::size_t>(j)] + "'");
      }
      if (!subset(ups[static_cast<std::size_t>(j)], ups[static_cast<std::size_t>(i)])) {
        throw error("relation is not transitive");
      }
    }
  }
  Poset p;
  p.names_ = std::move(names);
  p.up_ = std::move(ups);
  p.finish();
  return p;
}

void Poset::finish() {
  const int n = size();
  down_.assign(static_cast<std::size_t>(n), 0);
  cover_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j : bits_of(up_[static_cast<std::size_t>(i)])) {
      down_[static_cast<std::size_t>(j)] |= bit(i);
    }
  }
  // cover(i) = strict up-set minus anything reachable through an intermediate.
  for (int i = 0; i < n; ++i) {
    Mask su = strict_up(i);
    Mask via = 0;
    for (int k : bits_of(su)) via |= up_[static_cast<std::size_t>(k)] & ~bit(k);
    cover_[static_cast<std::size_t>(i)] = su & ~via;
  }
}

std::optional<int> Poset::find(std::string_view element) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == element) return i;
  }
  return std::nullopt;
}

int Poset::index_of(std::string_view element) const {
  if (auto i = find(element)) return *i;
  throw unknown_element("unknown element '" + std::string(element) + "'");
}

Mask Poset::covers_down(int i) const {
  Mask m = 0;
  for (int j = 0; j < size(); ++j) {
    if (has_bit(cover_[static_cast<std::size_t>(j)], i)) m |= bit(j);
  }
  return m;
}

Mask Poset::minimals() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i) {
    if (strict_down(i) == 0) m |= bit(i);
  }
  return m;
}

Mask Poset::maximals() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i) {
    if (strict_up(i) == 0) m |= bit(i);
  }
  return m;
}

bool Poset::is_upset(Mask m) const {
  for (int x : bits_of(m)) {
    if (!subset(up(x), m)) return false;
  }
  return true;
}

bool Poset::is_antichain(Mask m) const {
  for (int x : bits_of(m)) {
    if ((strict_up(x) & m) != 0 || (strict_down(x) & m) != 0) return false;
  }
  return true;
}

Mask principal_upset(const Poset& p, int x) {
  if (x < 0 || x >= p.size()) throw unknown_element("element index out of range");
  return p.up(x);
}

Mask principal_upset(const Poset& p, std::string_view element) {
  return p.up(p.index_of(element));
}

std::vector<int> linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  Mask left = p.all();
  while (left != 0) {
    for (int i = 0; i < n; ++i) {
      if (has_bit(left, i) && (p.strict_down(i) & left) == 0) {
        order.push_back(i);
        left &= ~bit(i);
        break;
      }
    }
  }
  return order;
}

std::vector<Mask> all_upsets(const Poset& p, int cap) {
  if (p.size() > cap) {
    throw cap_exceeded("up-set enumeration over " + std::to_string(p.size()) +
                       " elements exceeds the cap of " + std::to_string(cap));
  }
  std::vector<int> ext = linear_extension(p);
  std::vector<Mask> out;
  // Decide membership from the top of the extension down; every leaf is an
  // up-set, so no subset is visited in vain.
  std::function<void(int, Mask)> walk = [&](int k, Mask cur) {
    if (k < 0) {
      out.push_back(cur);
      return;
    }
    int x = ext[static_cast<std::size_t>(k)];
    walk(k - 1, cur);
    if (subset(p.strict_up(x), cur)) walk(k - 1, cur | bit(x));
  };
  walk(p.size() - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p, int cap) {
  if (p.size() > cap) {
    throw cap_exceeded("chain enumeration over " + std::to_string(p.size()) +
                       " elements exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int x) {
    cur.push_back(x);
    Mask nexts = p.covers_up(x);
    if (nexts == 0) {
      chains.push_back(cur);
    } else {
      for (int y : bits_of(nexts)) extend(y);
    }
    cur.pop_back();
  };
  for (int x : bits_of(p.minimals())) extend(x);
  return chains;
}

namespace {

struct IsoInvariant {
  int up, down, cov_up, cov_down;
  bool operator==(const IsoInvariant&) const = default;
  bool operator<(const IsoInvariant& o) const {
    return std::tie(up, down, cov_up, cov_down) < std::tie(o.up, o.down, o.cov_up, o.cov_down);
  }
};

std::vector<IsoInvariant> invariants(const Poset& p) {
  std::vector<IsoInvariant> inv;
  inv.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    inv.push_back({popcount(p.up(i)), popcount(p.down(i)), popcount(p.covers_up(i)),
                   popcount(p.covers_down(i))});
  }
  return inv;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q) {
  const int n = p.size();
  if (n != q.size()) return std::nullopt;
  auto pinv = invariants(p);
  auto qinv = invariants(q);
  {
    auto ps = pinv;
    auto qs = qinv;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return std::nullopt;
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (!(pinv[static_cast<std::size_t>(i)] == qinv[static_cast<std::size_t>(j)])) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        int jk = map[static_cast<std::size_t>(k)];
        if (p.leq(i, k) != q.leq(j, jk) || p.leq(k, i) != q.leq(jk, j)) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = 1;
      if (place(i + 1)) return true;
      map[static_cast<std::size_t>(i)] = -1;
      used[static_cast<std::size_t>(j)] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

namespace {

// Canonical certificate of a poset: the minimum, over all relabelings, of the
// n*n relation matrix read row-major as a bit string.
std::uint64_t canonical_certificate(int n, const std::vector<Mask>& up) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    // perm[i] = new position of original element i.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (has_bit(up[static_cast<std::size_t>(i)], j)) {
          code |= std::uint64_t{1}
                  << (perm[static_cast<std::size_t>(i)] * n + perm[static_cast<std::size_t>(j)]);
        }
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n, int cap) {
  if (n < 1 || n > cap || n > 8) {
    throw cap_exceeded("poset generation for n=" + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(cap));
  }
  // Every isomorphism class has a representative whose index order is a
  // linear extension, so strict upper-triangular relations suffice.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const int nslots = static_cast<int>(slots.size());

  std::map<std::uint64_t, int> seen;  // certificate -> marker (ordered for determinism)
  for (Mask rel = 0; rel < (Mask{1} << nslots); ++rel) {
    std::vector<Mask> up(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = bit(i);
    for (int s = 0; s < nslots; ++s) {
      if (has_bit(rel, s)) {
        up[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)].first)] |=
            bit(slots[static_cast<std::size_t>(s)].second);
      }
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (int j : bits_of(up[static_cast<std::size_t>(i)] & ~bit(i))) {
        if (!subset(up[static_cast<std::size_t>(j)], up[static_cast<std::size_t>(i)])) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    seen.emplace(canonical_certificate(n, up), 0);
  }

  std::vector<Poset> out;
  out.reserve(seen.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  for (const auto& [code, _] : seen) {
    std::vector<Mask> up(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((code >> (i * n + j)) & 1) up[static_cast<std::size_t>(i)] |= bit(j);
      }
    }
    out.push_back(Poset::from_relation(names, std::move(up)));
  }
  return out;
}

Poset subposet(const Poset& p, Mask keep) {
  std::vector<int> members = bits_of(keep);
  std::vector<int> pos(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t k = 0; k < members.size(); ++k) pos[static_cast<std::size_t>(members[k])] = static_cast<int>(k);
  std::vector<std::string> names;
  std::vector<Mask> up(members.size(), 0);
  names.reserve(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    names.push_back(p.name(members[k]));
    for (int j : bits_of(p.up(members[k]) & keep)) {
      up[k] |= bit(pos[static_cast<std::size_t>(j)]);
    }
  }
  return Poset::from_relation(std::move(names), std::move(up));
}

std::string set_label(const Poset& p, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : bits_of(m)) {
    if (!first) out += ',';
    out += p.name(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace latrep
