#ifndef CONCORD_OPS_HPP
#define CONCORD_OPS_HPP

#include <concord/cohomology.hpp>

#include <optional>
#include <string>

namespace concord {

// A cohomology operation written out in the chosen bases: column j is the
// image of source generator j, in target-generator coordinates mod the
// target modulus. Partially defined operations carry a per-column flag.
struct OperationMatrix {
    std::string name;
    int source_degree = 0;
    Int source_modulus = 0;
    int target_degree = 0;
    Int target_modulus = 0;
    int rows = 0, cols = 0;
    std::vector<Int> entries;            // row-major
    std::vector<char> defined;           // per column; empty = all defined

    Int at(int i, int j) const { return entries[size_t(i) * cols + j]; }
    bool is_zero() const;
    bool all_defined() const;
    // image of an element given in source coordinates
    std::vector<Int> apply(const std::vector<Int>& coords) const;
};

// Front-face/back-face simplicial cup product. Requires a simplicial engine
// and equal coefficient moduli.
CohomClass cup(const CohomologyEngine& E, const CohomClass& a, const CohomClass& b);

// Steenrod cup-i product of mod-2 cocycles (returns a cochain, not a class):
// the defining identity is delta(a u_i b) = a u_{i-1} b + b u_{i-1} a.
std::vector<Int> cup_i(const CohomologyEngine& E, const CohomClass& a, const CohomClass& b, int i);

// Sq^k via [a u_{deg-k} a]; Sq^0 = id, Sq^k = 0 for k > deg, Sq^3 = Sq^1 Sq^2.
CohomClass steenrod_sq(const CohomologyEngine& E, int k, const CohomClass& a);

// Higher Bockstein: value of the class of (delta lift)/2^r, canonically
// reduced modulo the stage-(r-1) indeterminacy; nullopt when no lift exists
// to stage r.
std::optional<CohomClass> bockstein_higher(const CohomologyEngine& E, int r, const CohomClass& a);

// Subgroup of H^{k+1}(;Z/2) formed by all stage-s Bockstein values from
// degree k (the indeterminacy of beta_{s+1}); returned as an F2 echelon
// basis in target coordinates.
std::vector<std::vector<Int>> bockstein_image(const CohomologyEngine& E, int s, int k);

// Connecting map of 0 -> Z/2 -> Z/8 -> Z/4 -> 0 on a mod-4 class.
CohomClass d2_connecting(const CohomologyEngine& E, const CohomClass& a);

// Sq^2 after d2 (simplicial only).
CohomClass sq2_d2(const CohomologyEngine& E, const CohomClass& a);

struct WuData {
    CohomClass v1, v2; // Wu classes
    CohomClass w1, w2; // Stiefel-Whitney classes, w1 = v1, w2 = Sq^1 v1 + v2
    bool spin = false;
};

// Wu classes from the mod-2 intersection pairing; errors when the pairing
// is singular (non-manifold input).
WuData wu_and_sw(const CohomologyEngine& E);

// F2 helpers shared with the profile/case detectors.
std::vector<std::vector<Int>> f2_echelon(std::vector<std::vector<Int>> rows);
std::vector<Int> f2_reduce(std::vector<Int> v, const std::vector<std::vector<Int>>& echelon);
bool f2_in_span(const std::vector<Int>& v, const std::vector<std::vector<Int>>& echelon);

} // namespace concord

#endif
