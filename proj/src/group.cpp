#include "abelian3/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelian3 {

std::string to_string(const Group3& g) {
  return "(" + std::to_string(g.m) + "," + std::to_string(g.n) + "," +
         std::to_string(g.r) + ")";
}

void require_valid(const Group3& g) {
  if (g.m == 0 || g.n == 0 || g.r == 0) {
    throw std::invalid_argument("group parameters must be positive: " +
                                to_string(g));
  }
}

void require_materializable(const Group3& g, u64 bound) {
  require_valid(g);
  if (g.order() > bound) {
    throw std::length_error("group " + to_string(g) + " has order " +
                            to_string(g.order()) +
                            ", above the element bound " +
                            std::to_string(bound));
  }
}

bool ElementSet::contains(const Element& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

}  // namespace abelian3
