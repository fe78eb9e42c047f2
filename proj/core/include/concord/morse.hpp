#ifndef CONCORD_MORSE_HPP
#define CONCORD_MORSE_HPP

#include <concord/chain.hpp>

namespace concord {

// Chain-level Gaussian elimination at unit pivots ("algebraic Morse
// reduction"). Produces a homotopy-equivalent complex, usually near-minimal,
// together with enough of the chain equivalence to move cochains both ways:
//
//   pull_cochain = transpose of the projection  (small -> original, sends
//                  representatives to honest cochains on the original cells)
//   push_cochain = transpose of the inclusion   (original -> small, preserves
//                  cocycles and cohomology classes)
//
// Elimination order prefers zero-fill pivots (single-entry rows/columns),
// then smallest column; fully deterministic.
class MorseReduction {
public:
    explicit MorseReduction(const ChainComplex& C);

    const ChainComplex& reduced() const { return small_; }
    int original_rank(int k) const { return (k < 0 || k >= int(orig_ranks_.size())) ? 0 : orig_ranks_[k]; }
    int new_index(int k, int old_index) const;
    int old_index(int k, int new_index) const;

    std::vector<Int> pull_cochain(int deg, const std::vector<Int>& small) const;
    std::vector<Int> push_cochain(int deg, const std::vector<Int>& big) const;

    std::size_t eliminations() const { return log_.size(); }

private:
    struct LogEntry {
        int k;  // removed pair: cell a in degree k, cell b in degree k-1
        int a, b;
        Int u;  // pivot entry, |u| = 1
        std::vector<std::pair<int, Int>> alpha; // row b of boundary(k) without column a
        std::vector<std::pair<int, Int>> beta;  // column a of boundary(k) without row b
    };

    ChainComplex small_;
    std::vector<int> orig_ranks_;
    std::vector<std::vector<int>> old2new_, new2old_;
    std::vector<LogEntry> log_;
};

} // namespace concord

#endif
