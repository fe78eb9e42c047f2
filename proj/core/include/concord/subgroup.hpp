#ifndef CONCORD_SUBGROUP_HPP
#define CONCORD_SUBGROUP_HPP

#include <concord/smith.hpp>

namespace concord {

// Subgroup of a finitely generated abelian group, given by generator
// coordinate vectors in the ambient's canonical generators (free generators
// first, then torsion; torsion coordinates reduced mod the invariant factor).
struct ModSubgroup {
    AbelianGroup ambient;
    std::vector<std::vector<Int>> generators;
    AbelianGroup structure;
};

// Isomorphism type of the subgroup generated by `generators` inside `ambient`.
ModSubgroup subgroup_structure(const AbelianGroup& ambient,
                               std::vector<std::vector<Int>> generators);

// Generating vectors of {x : A x = 0 mod m}, entries reduced to [0, m).
std::vector<std::vector<Int>> kernel_mod(const IntMatrix& A, const Int& m);

} // namespace concord

#endif
