#include <concord/subgroup.hpp>

#include <stdexcept>

namespace concord {

ModSubgroup subgroup_structure(const AbelianGroup& ambient,
                               std::vector<std::vector<Int>> generators)
{
    const int gc = ambient.generator_count();
    for (auto& v : generators) {
        if (int(v.size()) != gc)
            throw std::invalid_argument("subgroup_structure: coordinate-length mismatch");
        for (int i = 0; i < gc; ++i) {
            const Int d = ambient.generator_order(i);
            if (d != 0) v[i] = mod_floor(v[i], d);
        }
    }

    // Subgroup = image of Z^g -> ambient; its structure is Z^g modulo the
    // kernel of that map, and the kernel is the x-projection of
    // ker [M | D] with D the ambient torsion relations.
    const int g = int(generators.size());
    const int t = int(ambient.torsion().size());
    IntMatrix MD(gc, g + t);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < gc; ++i) MD.at(i, j) = generators[size_t(j)][i];
    for (int j = 0; j < t; ++j)
        MD.at(ambient.free_rank() + j, g + j) = ambient.torsion()[j];

    IntMatrix K = kernel_basis(MD);
    IntMatrix rel(g, K.cols());
    for (int j = 0; j < K.cols(); ++j)
        for (int i = 0; i < g; ++i) rel.at(i, j) = K.at(i, j);

    return ModSubgroup{ambient, std::move(generators), cokernel_group(rel)};
}

std::vector<std::vector<Int>> kernel_mod(const IntMatrix& A, const Int& m)
{
    if (m < 2) throw std::invalid_argument("kernel_mod: modulus must be >= 2");
    IntMatrix ext(A.rows(), A.cols() + A.rows());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) ext.at(i, j) = A.at(i, j);
        ext.at(i, A.cols() + i) = m;
    }
    IntMatrix K = kernel_basis(ext);
    std::vector<std::vector<Int>> gens;
    for (int j = 0; j < K.cols(); ++j) {
        std::vector<Int> v(A.cols());
        bool nonzero = false;
        for (int i = 0; i < A.cols(); ++i) {
            v[i] = mod_floor(K.at(i, j), m);
            nonzero |= v[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(v));
    }
    return gens;
}

} // namespace concord
