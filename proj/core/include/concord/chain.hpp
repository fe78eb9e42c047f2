#ifndef CONCORD_CHAIN_HPP
#define CONCORD_CHAIN_HPP

#include <concord/int_matrix.hpp>
#include <concord/simplicial.hpp>

namespace concord {

// Column-sparse integer matrix; entries within a column sorted by row.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Int>>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

    static SparseMat from_dense(const IntMatrix& m);
    IntMatrix to_dense() const;
    std::vector<Int> apply(const std::vector<Int>& x) const;           // A x
    std::vector<Int> apply_transpose(const std::vector<Int>& x) const; // A^T x
    std::size_t nnz() const;
};

// Chain complex C_0 <- C_1 <- ... <- C_top with chosen bases.
// Synthetic complexes (no underlying simplicial structure) are first-class;
// operations that need cup products reject them.
class ChainComplex {
public:
    static ChainComplex from_boundaries(std::vector<int> ranks, std::vector<SparseMat> boundaries,
                                        std::uint64_t complex_id = 0);

    int top() const { return int(ranks_.size()) - 1; }
    int rank(int k) const { return (k < 0 || k > top()) ? 0 : ranks_[k]; }
    // boundary(k): C_k -> C_{k-1}; zero-shaped matrices outside 1..top
    const SparseMat& boundary(int k) const;
    IntMatrix boundary_dense(int k) const { return boundary(k).to_dense(); }
    // coboundary in degree k = transpose of boundary(k+1): C^k -> C^{k+1}
    IntMatrix coboundary_dense(int k) const;
    std::vector<Int> coboundary_apply(int k, const std::vector<Int>& x) const;

    std::uint64_t id() const { return id_; }

private:
    std::uint64_t id_ = 0;
    std::vector<int> ranks_;
    std::vector<SparseMat> bnd_; // bnd_[k] = boundary(k), bnd_[0] unused
};

// Simplicial chain complex with the alternating-sign rule on sorted vertices.
ChainComplex chain_complex(const SimplicialComplex& K);

// Synthetic two-cell complex with H_k = Z/m and no other reduced homology:
// C_{k+1} = Z --(m)--> C_k = Z.
ChainComplex moore_chain_complex(const Int& m, int k);

} // namespace concord

#endif
