#pragma once

// Finite groups and the Hopf algebras built from them.

#include "cqg/hopf.hpp"

namespace cqg {

struct GroupTable {
  std::string name;
  std::vector<std::string> elements;        // elements[0] is the identity
  std::vector<std::vector<std::size_t>> mul;  // mul[a][b] = ab

  std::size_t order() const { return elements.size(); }
  std::size_t inverse(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group3();
GroupTable dihedral_group4();
GroupTable quaternion_group();

/// CG: grouplike basis, g° = g, S(g) = g^{-1}.
HopfData group_algebra(const GroupTable& g);
/// Functions on G: delta basis, Delta d_g = sum_h d_h (x) d_{h^{-1} g}, d_g° = d_{g^{-1}}.
HopfData function_algebra(const GroupTable& g);
/// Sweedler's 4-dimensional algebra <g, x | g^2 = 1, x^2 = 0, xg = -gx> with
/// g° = g and x° = gx. Not cosemisimple.
HopfData sweedler_h4();

/// The shipped group list: Z/2, Z/3, Z/4, S3, D4, Q8.
std::vector<GroupTable> shipped_groups();

}  // namespace cqg
