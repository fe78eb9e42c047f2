#ifndef CONCORD_ABELIAN_GROUP_HPP
#define CONCORD_ABELIAN_GROUP_HPP

#include <concord/ints.hpp>
#include <optional>
#include <string>
#include <vector>

namespace concord {

// Finitely generated abelian group in canonical form: free rank plus the
// chain of invariant factors d_1 | d_2 | ... | d_k, each d_i >= 2.
// Equality of field values is equality of isomorphism types.
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(int free_rank, std::vector<Int> torsion);

    static AbelianGroup trivial() { return AbelianGroup(); }
    static AbelianGroup free(int rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(const Int& n); // Z if n == 0, Z/n otherwise

    // Canonical form from an arbitrary list of cyclic orders (0 = Z).
    static AbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    // Order of the torsion part; call only on finite groups for |G|.
    Int torsion_order() const;

    // Number of generators in the canonical presentation.
    int generator_count() const { return free_rank_ + int(torsion_.size()); }
    // Order of canonical generator i (0 = infinite); free generators first.
    Int generator_order(int i) const;

    AbelianGroup direct_sum(const AbelianGroup& rhs) const;

    // Remove one cyclic summand Z/q (q a prime power present in the primary
    // decomposition). Returns std::nullopt when Z/q is not a direct summand.
    std::optional<AbelianGroup> cancel_cyclic(const Int& q) const;

    // dim_{F_p}(G (x) Z/p) = free rank + #(invariant factors divisible by p)
    int rank_mod(const Int& p) const;

    bool operator==(const AbelianGroup& rhs) const = default;
    bool operator!=(const AbelianGroup& rhs) const = default;

    std::string to_string() const; // e.g. "Z^2 + Z/2 + Z/12", "0"

private:
    int free_rank_ = 0;
    std::vector<Int> torsion_;
};

// Order of the element with coordinates x in the canonical generators of g
// (finite groups only; coordinate i taken mod the i-th generator order).
Int element_order(const AbelianGroup& g, const std::vector<Int>& x);

// All elements of a finite group as coordinate vectors (throws if the group
// is infinite or has more than `bound` elements).
std::vector<std::vector<Int>> enumerate_elements(const AbelianGroup& g, std::uint64_t bound = 1u << 16);

} // namespace concord

#endif
