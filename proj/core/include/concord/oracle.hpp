#ifndef CONCORD_ORACLE_HPP
#define CONCORD_ORACLE_HPP

#include <concord/cohomology.hpp>
#include <concord/subgroup.hpp>

#include <optional>
#include <set>

namespace concord::oracle {

// Independent verifiers used by the test surface and the CLI `verify`
// command. Nothing here shares a computation path with the engine.

// Invariant factors via gcds of k x k minors: s_k = D_k / D_{k-1}.
// Exponential; intended for dims <= ~6.
std::vector<Int> snf_diagonal_by_minors(const IntMatrix& A);

// Membership of b in the column span of A over Z, by rational solve +
// integrality (Cramer/Bareiss), independent of the Smith machinery.
bool in_column_span(const IntMatrix& A, const std::vector<Int>& b);

// Order of Z^rows / column-span(A) for square nonsingular A: |det A|.
Int cokernel_order_square(const IntMatrix& A);

// Coset count of Z^n / column-span(A) by breadth-first search. Requires the
// quotient to be finite with at most `bound` elements.
Int cokernel_order_bfs(const IntMatrix& A, std::uint64_t bound = 1u << 12);

// All elements of the subgroup generated inside a finite ambient group;
// closure under addition.
std::set<std::vector<Int>> brute_subgroup(const AbelianGroup& ambient,
                                          const std::vector<std::vector<Int>>& generators,
                                          std::uint64_t bound = 1u << 16);

// |H^k(C; Z/m)| by exhaustive enumeration of cochains (m >= 2).
struct BruteCohomology {
    Int order;
    std::vector<std::vector<Int>> cocycles; // every mod-m cocycle
};
BruteCohomology brute_cohomology(const ChainComplex& C, int k, const Int& m,
                                 std::uint64_t bound = 1u << 20);

// Is z (a mod-m k-cochain) a coboundary? Enumerates all (k-1)-cochains.
bool brute_is_coboundary(const ChainComplex& C, int k, const Int& m, const std::vector<Int>& z,
                         std::uint64_t bound = 1u << 20);

// Exhaustive-lift Bockstein: searches integral lifts of a mod-2 k-cocycle
// with entries in a window, returns the stage-r value cochain of the first
// lift found (nullopt when no lift exists in the window).
std::optional<std::vector<Int>> brute_bockstein(const ChainComplex& C, int r, int k,
                                                const std::vector<Int>& a_mod2,
                                                std::uint64_t bound = 1u << 20);

// Same for the Z/8-extension connecting map on a mod-4 k-cocycle.
std::optional<std::vector<Int>> brute_d2(const ChainComplex& C, int k,
                                         const std::vector<Int>& a_mod4);

} // namespace concord::oracle

#endif
