#ifndef CONCORD_SMITH_HPP
#define CONCORD_SMITH_HPP

#include <concord/abelian_group.hpp>
#include <concord/int_matrix.hpp>
#include <optional>

namespace concord {

// U * A * V = S with S diagonal, s_1 | s_2 | ..., U and V unimodular.
// Inverse transforms are carried along so solves need no extra inversion.
struct SmithResult {
    IntMatrix U, Uinv, S, V, Vinv;

    int rank() const;
    std::vector<Int> diagonal() const;
};

// Deterministic Smith reduction: pivot = smallest-magnitude nonzero entry,
// ties broken by (row, col).
SmithResult smith_normal_form(const IntMatrix& A);

// Columns form a basis of ker(A : Z^cols -> Z^rows).
IntMatrix kernel_basis(const IntMatrix& A);
IntMatrix kernel_basis(const SmithResult& snf);

// Integer solution of A x = b, if one exists.
std::optional<std::vector<Int>> solve_exact(const SmithResult& snf, const std::vector<Int>& b);

// Z^rows / column-span(A), canonical form.
AbelianGroup cokernel_group(const IntMatrix& A);

// Presentation of L/R where the columns of BL are a basis of a lattice L
// (full column rank) and the columns of GR generate a sublattice R ⊆ L.
// Generators are ordered free-first, then torsion by ascending order.
class LatticeQuotient {
public:
    LatticeQuotient(IntMatrix BL, const IntMatrix& GR);

    const AbelianGroup& group() const { return group_; }

    // representative of generator i as a vector in the ambient Z^n
    std::vector<Int> representative(int i) const;

    // coordinates of z in the quotient; throws when z is not in L.
    // Torsion coordinates are reduced mod the generator order.
    std::vector<Int> decompose(const std::vector<Int>& z) const;

private:
    IntMatrix BL_;
    SmithResult BLsnf_;   // solves BL y = z
    IntMatrix Uprime_;    // from the Smith form of the relation coordinates
    IntMatrix Btil_;      // BL * Uprime^{-1}
    AbelianGroup group_;
    std::vector<int> gencol_; // generator -> column of Btil / coordinate index
    std::vector<Int> genord_; // generator order (0 = free)
};

} // namespace concord

#endif
