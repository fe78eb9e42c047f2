#include <concord/simplicial.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

namespace concord {

namespace {

std::atomic<std::uint64_t> next_complex_id{1};

std::string pack(const Simplex& s)
{
    std::string key;
    key.reserve(s.size() * sizeof(int));
    for (int v : s) key.append(reinterpret_cast<const char*>(&v), sizeof(int));
    return key;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets)
{
    if (facets.empty()) throw std::invalid_argument("build_complex: empty facet list");

    SimplicialComplex K;
    K.id_ = next_complex_id.fetch_add(1);

    int dim = -1;
    for (const Simplex& f : facets) {
        if (f.empty()) throw std::invalid_argument("build_complex: empty facet");
        Simplex s = f;
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1])
                throw std::invalid_argument("build_complex: duplicate vertex inside a facet");
        if (s.front() < 0) throw std::invalid_argument("build_complex: negative vertex id");
        K.input_facets_.push_back(std::move(s));
        dim = std::max(dim, int(f.size()) - 1);
        K.vertex_count_ = std::max(K.vertex_count_, K.input_facets_.back().back() + 1);
    }

    // close downward, one dimension at a time
    std::vector<std::set<Simplex>> levels(dim + 1);
    for (const Simplex& f : K.input_facets_) levels[f.size() - 1].insert(f);
    for (int d = dim; d >= 1; --d)
        for (const Simplex& s : levels[d]) {
            Simplex face(s.size() - 1);
            for (size_t drop = 0; drop < s.size(); ++drop) {
                size_t w = 0;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face[w++] = s[i];
                levels[d - 1].insert(face);
            }
        }

    K.faces_.resize(dim + 1);
    K.index_.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        K.faces_[d].assign(levels[d].begin(), levels[d].end()); // lexicographic
        for (size_t i = 0; i < K.faces_[d].size(); ++i)
            K.index_[d].emplace(pack(K.faces_[d][i]), int(i));
    }

    // pure <=> every maximal simplex is top-dimensional: each input facet of
    // lower dimension must appear as a face of some top-dimensional facet
    K.pure_ = true;
    bool mixed = false;
    for (const Simplex& f : K.input_facets_)
        if (int(f.size()) - 1 < dim) mixed = true;
    if (!mixed) return K;

    std::set<Simplex> top_closure;
    {
        std::vector<std::set<Simplex>> cl(dim + 1);
        cl[dim] = levels[dim];
        for (int d = dim; d >= 1; --d)
            for (const Simplex& s : cl[d]) {
                Simplex face(s.size() - 1);
                for (size_t drop = 0; drop < s.size(); ++drop) {
                    size_t w = 0;
                    for (size_t i = 0; i < s.size(); ++i)
                        if (i != drop) face[w++] = s[i];
                    cl[d - 1].insert(face);
                }
            }
        for (auto& lvl : cl) top_closure.insert(lvl.begin(), lvl.end());
    }
    for (const Simplex& f : K.input_facets_)
        if (int(f.size()) - 1 < dim && !top_closure.count(f)) K.pure_ = false;

    return K;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const
{
    static const std::vector<Simplex> empty;
    if (dim < 0 || dim >= int(faces_.size())) return empty;
    return faces_[dim];
}

int SimplicialComplex::count(int dim) const { return int(simplices(dim).size()); }

int SimplicialComplex::index_of(int dim, const Simplex& s) const
{
    if (dim < 0 || dim >= int(index_.size())) return -1;
    auto it = index_[dim].find(pack(s));
    return it == index_[dim].end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::f_vector() const
{
    std::vector<int> f(faces_.size());
    for (size_t d = 0; d < faces_.size(); ++d) f[d] = int(faces_[d].size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (size_t d = 0; d < faces_.size(); ++d)
        chi += (d % 2 == 0 ? 1ll : -1ll) * (long long)faces_[d].size();
    return chi;
}

SimplicialComplex build_complex(const std::vector<Simplex>& facets)
{
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex product_complex(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    if (!k1.is_pure() || !k2.is_pure())
        throw std::invalid_argument("product_complex: both complexes must be pure");
    const int p = k1.dimension(), q = k2.dimension();
    const int n2 = k2.vertex_count();

    std::vector<Simplex> facets;
    std::vector<int> steps(p + q); // 0 = advance in the first factor
    for (const Simplex& sigma : k1.simplices(p))
        for (const Simplex& tau : k2.simplices(q)) {
            // monotone staircase paths through the (p+1) x (q+1) grid
            std::fill(steps.begin(), steps.begin() + p, 0);
            std::fill(steps.begin() + p, steps.end(), 1);
            std::sort(steps.begin(), steps.end());
            do {
                Simplex cell;
                cell.reserve(p + q + 1);
                int i = 0, j = 0;
                cell.push_back(sigma[0] * n2 + tau[0]);
                for (int s : steps) {
                    if (s == 0) ++i; else ++j;
                    cell.push_back(sigma[i] * n2 + tau[j]);
                }
                facets.push_back(std::move(cell));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    return build_complex(facets);
}

SimplicialComplex sphere_complex(int n)
{
    if (n < 0) throw std::invalid_argument("sphere_complex: dimension < 0");
    std::vector<Simplex> facets;
    // all (n+1)-subsets of {0..n+1}
    for (int drop = 0; drop <= n + 1; ++drop) {
        Simplex f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return build_complex(facets);
}

SimplicialComplex rp2_complex()
{
    return build_complex({{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                          {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

SimplicialComplex rp3_complex()
{
    // Barycentric subdivision of the boundary of the 4-dimensional
    // cross-polytope, modulo the antipodal map. One subdivision suffices:
    // a face and its antipode are never nested, so the quotient is simplicial.
    using Face = std::vector<int>; // signed axes, e.g. {+1,-2,+3}; sorted

    std::vector<Face> faces;
    std::map<Face, int> orbit_id;
    auto antipode = [](const Face& f) {
        Face g;
        for (int v : f) g.push_back(-v);
        std::sort(g.begin(), g.end());
        return g;
    };

    // all faces: nonempty sign-consistent subsets of {±1..±4}
    std::vector<Face> all;
    for (int mask = 1; mask < 16; ++mask) {
        int k = __builtin_popcount(mask);
        // each selected axis gets an independent sign
        std::vector<int> axes;
        for (int a = 0; a < 4; ++a)
            if (mask & (1 << a)) axes.push_back(a + 1);
        for (int signs = 0; signs < (1 << k); ++signs) {
            Face f;
            for (int t = 0; t < k; ++t)
                f.push_back((signs & (1 << t)) ? -axes[t] : axes[t]);
            std::sort(f.begin(), f.end());
            all.push_back(std::move(f));
        }
    }
    std::sort(all.begin(), all.end());
    int next = 0;
    for (const Face& f : all) {
        if (orbit_id.count(f)) continue;
        orbit_id[f] = next;
        orbit_id[antipode(f)] = next;
        ++next;
    }

    // facets of the quotient = orbits of maximal flags v0 ⊂ v1 ⊂ v2 ⊂ v3
    std::set<Simplex> facets;
    std::vector<int> perm = {0, 1, 2, 3};
    for (int mask = 0; mask < 16; ++mask) {
        Face top;
        for (int a = 0; a < 4; ++a) top.push_back((mask & (1 << a)) ? -(a + 1) : (a + 1));
        std::sort(top.begin(), top.end());
        std::sort(perm.begin(), perm.end());
        do {
            Simplex cell;
            Face partial;
            for (int idx : perm) {
                partial.push_back(top[idx]);
                Face key = partial;
                std::sort(key.begin(), key.end());
                cell.push_back(orbit_id.at(key));
            }
            std::sort(cell.begin(), cell.end());
            facets.insert(std::move(cell));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return build_complex(std::vector<Simplex>(facets.begin(), facets.end()));
}

} // namespace concord
