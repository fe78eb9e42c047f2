#ifndef CONCORD_COHOMOLOGY_HPP
#define CONCORD_COHOMOLOGY_HPP

#include <concord/chain.hpp>
#include <concord/morse.hpp>
#include <concord/smith.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace concord {

// Cohomology class of fixed degree and coefficient modulus (0 = integer
// coefficients), carried with a representative cocycle on the cells of the
// complex it belongs to.
struct CohomClass {
    int degree = 0;
    Int modulus = 0;
    std::uint64_t complex_id = 0;
    std::vector<Int> cochain;

    bool is_zero_cochain() const
    {
        for (const Int& v : cochain)
            if (v != 0) return false;
        return true;
    }
};

struct TopStructure {
    bool orientable = false;
    bool h1_zero = false;
    std::vector<Int> fundamental_class_mod2; // sum of all top cells
};

// Computes cohomology groups with representative cocycles for one complex.
// One Morse reduction is shared by all degrees and moduli; results are
// cached. All queries are const and guarded, safe for concurrent readers.
class CohomologyEngine {
public:
    explicit CohomologyEngine(const SimplicialComplex& K);
    explicit CohomologyEngine(ChainComplex C); // synthetic input

    const SimplicialComplex* simplicial() const { return K_; }
    const ChainComplex& complex() const { return C_; }
    const MorseReduction& reduction() const { return *morse_; }
    int top() const { return C_.top(); }
    std::uint64_t id() const { return C_.id(); }

    struct Basis {
        AbelianGroup group;
        std::vector<CohomClass> classes; // representatives on the original cells
    };

    const Basis& cohomology(int k, const Int& m) const;
    AbelianGroup homology(int k) const; // integral

    // class coordinates in the generators of cohomology(k, m)
    std::vector<Int> decompose(const CohomClass& c) const;
    std::vector<Int> decompose_small(int k, const Int& m, const std::vector<Int>& small_cochain) const;
    CohomClass class_from_coords(int k, const Int& m, const std::vector<Int>& coords) const;
    CohomClass zero_class(int k, const Int& m) const;

    bool is_cocycle(const CohomClass& c) const;
    bool same_class(const CohomClass& a, const CohomClass& b) const;

    // pseudomanifold checks + orientability + H_1 = 0 (simplicial only)
    const TopStructure& top_structure() const;

private:
    struct Quot {
        std::unique_ptr<LatticeQuotient> q;
        Int modulus;
    };
    const Quot& quotient(int k, const Int& m) const;

    const SimplicialComplex* K_ = nullptr;
    ChainComplex C_;
    std::unique_ptr<MorseReduction> morse_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Int>, Quot> quot_;
    mutable std::map<std::pair<int, Int>, Basis> basis_;
    mutable std::map<int, AbelianGroup> homology_;
    mutable std::optional<TopStructure> topstr_;
};

// Spec-level convenience wrappers.
std::pair<AbelianGroup, std::vector<CohomClass>> cohomology(const ChainComplex& C, int k, const Int& m);
TopStructure top_structure(const SimplicialComplex& K);

} // namespace concord

#endif
