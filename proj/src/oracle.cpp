#include "abelian3/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace abelian3::oracle {

namespace {

// Elements are numbered (x n + y) r + z, which orders them lexicographically.
class Indexer {
 public:
  explicit Indexer(const Group3& g) : g_(g), size_(static_cast<std::uint32_t>(g.order())) {}

  std::uint32_t size() const { return size_; }

  std::uint32_t encode(const Element& e) const {
    if (e[0] >= g_.m || e[1] >= g_.n || e[2] >= g_.r) {
      throw std::invalid_argument("element outside the group");
    }
    return static_cast<std::uint32_t>((e[0] * g_.n + e[1]) * g_.r + e[2]);
  }

  Element decode(std::uint32_t i) const {
    const u64 z = i % g_.r;
    const u64 rest = i / g_.r;
    return {rest / g_.n, rest % g_.n, z};
  }

  std::uint32_t add(std::uint32_t i, std::uint32_t j) const {
    const Element x = decode(i), y = decode(j);
    return encode({(x[0] + y[0]) % g_.m, (x[1] + y[1]) % g_.n,
                   (x[2] + y[2]) % g_.r});
  }

 private:
  Group3 g_;
  std::uint32_t size_;
};

std::vector<std::uint32_t> closure_indices(const std::vector<std::uint32_t>& gens,
                                           const Indexer& ix) {
  std::vector<char> seen(ix.size(), 0);
  std::vector<std::uint32_t> members{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::uint32_t g : gens) {
      const std::uint32_t y = ix.add(members[head], g);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet to_element_set(const std::vector<std::uint32_t>& members,
                          const Indexer& ix) {
  ElementSet out;
  out.elements.reserve(members.size());
  for (std::uint32_t i : members) out.elements.push_back(ix.decode(i));
  return out;
}

std::vector<ElementSet> to_sorted_sets(const std::set<std::vector<std::uint32_t>>& sets,
                                       const Indexer& ix) {
  std::vector<ElementSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(to_element_set(s, ix));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElementSet closure(const std::vector<Element>& generators, const Group3& group,
                   u64 bound) {
  require_materializable(group, bound);
  const Indexer ix(group);
  std::vector<std::uint32_t> gens;
  for (const auto& g : generators) gens.push_back(ix.encode(g));
  return to_element_set(closure_indices(gens, ix), ix);
}

std::vector<ElementSet> all_subgroups(const Group3& group, u64 bound) {
  require_materializable(group, bound);
  const Indexer ix(group);

  struct Node {
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> generators;
  };
  std::set<std::vector<std::uint32_t>> found;
  std::deque<Node> pending;
  pending.push_back({{0}, {}});
  found.insert({0});

  while (!pending.empty()) {
    Node h = std::move(pending.front());
    pending.pop_front();
    std::vector<char> covered(ix.size(), 0);
    for (std::uint32_t x : h.members) covered[x] = 1;
    for (std::uint32_t g = 0; g < ix.size(); ++g) {
      if (covered[g]) continue;
      // <H, g> depends only on the coset g + H.
      for (std::uint32_t x : h.members) covered[ix.add(g, x)] = 1;
      Node k{{}, h.generators};
      k.generators.push_back(g);
      k.members = closure_indices(k.generators, ix);
      if (found.insert(k.members).second) pending.push_back(std::move(k));
    }
  }
  return to_sorted_sets(found, ix);
}

std::vector<ElementSet> cyclic_subgroups(const Group3& group, u64 bound) {
  require_materializable(group, bound);
  const Indexer ix(group);
  std::set<std::vector<std::uint32_t>> found;
  for (std::uint32_t g = 0; g < ix.size(); ++g) {
    found.insert(closure_indices({g}, ix));
  }
  return to_sorted_sets(found, ix);
}

bool is_subgroup(const ElementSet& set, const Group3& group) {
  if (set.elements.empty() || group.order() % set.size() != 0) return false;
  if (!set.contains({0, 0, 0})) return false;
  for (const auto& x : set.elements) {
    for (const auto& y : set.elements) {
      const Element sum{(x[0] + y[0]) % group.m, (x[1] + y[1]) % group.n,
                        (x[2] + y[2]) % group.r};
      if (!set.contains(sum)) return false;
    }
  }
  return true;
}

std::vector<std::array<u64, 2>> project_first_two(const ElementSet& set) {
  std::vector<std::array<u64, 2>> out;
  out.reserve(set.size());
  for (const auto& e : set.elements) out.push_back({e[0], e[1]});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace abelian3::oracle
