#ifndef CONCORD_SIMPLICIAL_HPP
#define CONCORD_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace concord {

using Simplex = std::vector<int>; // strictly increasing vertex ids

// Finite simplicial complex given by its facet list. The full face lattice
// is derived at construction; within each dimension simplices are stored in
// lexicographic order, which fixes all basis numbering downstream.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    int dimension() const { return int(faces_.size()) - 1; }
    int vertex_count() const { return vertex_count_; }
    bool is_pure() const { return pure_; }
    std::uint64_t id() const { return id_; }

    const std::vector<Simplex>& simplices(int dim) const;
    int count(int dim) const;
    const std::vector<Simplex>& facets() const { return input_facets_; }

    // index of a simplex within its dimension (-1 when absent)
    int index_of(int dim, const Simplex& s) const;

    std::vector<int> f_vector() const;
    long long euler_characteristic() const;

private:
    SimplicialComplex() = default;

    std::uint64_t id_ = 0;
    int vertex_count_ = 0;
    bool pure_ = true;
    std::vector<Simplex> input_facets_;
    std::vector<std::vector<Simplex>> faces_;                  // by dimension
    std::vector<std::unordered_map<std::string, int>> index_;  // key = packed vertices
};

// Facet-list constructor (errors on empty input or repeated vertex in a facet).
SimplicialComplex build_complex(const std::vector<Simplex>& facets);

// Staircase (shuffle) triangulation of |K1| x |K2|; requires pure inputs.
// Vertex (u, v) gets id u * K2.vertex_count() + v.
SimplicialComplex product_complex(const SimplicialComplex& k1, const SimplicialComplex& k2);

// Boundary of the (n+1)-simplex: the minimal triangulation of S^n.
SimplicialComplex sphere_complex(int n);

// Triangulations of small classical spaces used throughout the tests.
SimplicialComplex rp2_complex();  // 6-vertex projective plane
SimplicialComplex rp3_complex();  // antipodal quotient of the subdivided 16-cell boundary

} // namespace concord

#endif
