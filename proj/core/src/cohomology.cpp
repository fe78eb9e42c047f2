#include <concord/cohomology.hpp>

#include <stdexcept>

namespace concord {

CohomologyEngine::CohomologyEngine(const SimplicialComplex& K)
    : K_(&K), C_(chain_complex(K)), morse_(std::make_unique<MorseReduction>(C_))
{}

CohomologyEngine::CohomologyEngine(ChainComplex C)
    : C_(std::move(C)), morse_(std::make_unique<MorseReduction>(C_))
{}

const CohomologyEngine::Quot& CohomologyEngine::quotient(int k, const Int& m) const
{
    auto key = std::make_pair(k, m);
    auto it = quot_.find(key);
    if (it != quot_.end()) return it->second;

    const ChainComplex& S = morse_->reduced();
    const int nk = S.rank(k);
    IntMatrix delta_k = S.coboundary_dense(k); // C^k -> C^{k+1}

    IntMatrix BL(nk, 0), GR(nk, 0);
    if (m == 0) {
        BL = kernel_basis(delta_k);
        // relations: image of the previous coboundary
        GR = IntMatrix(nk, k >= 1 ? S.rank(k - 1) : 0);
        if (k >= 1) {
            IntMatrix d = S.coboundary_dense(k - 1); // (n_k x n_{k-1})
            for (int j = 0; j < d.cols(); ++j)
                for (int i = 0; i < nk; ++i) GR.at(i, j) = d.at(i, j);
        }
    } else {
        // basis of {x : delta x = 0 mod m} via the Smith form of delta_k
        SmithResult snf = smith_normal_form(delta_k);
        const int n = std::min(delta_k.rows(), delta_k.cols());
        BL = IntMatrix(nk, nk);
        for (int j = 0; j < nk; ++j) {
            Int s = j < n ? snf.S.at(j, j) : Int(0);
            Int mj = m / int_gcd(s, m); // gcd(0, m) = m, so free directions get 1
            for (int i = 0; i < nk; ++i) BL.at(i, j) = snf.V.at(i, j) * mj;
        }
        const int prev = k >= 1 ? S.rank(k - 1) : 0;
        GR = IntMatrix(nk, prev + nk);
        if (k >= 1) {
            IntMatrix d = S.coboundary_dense(k - 1);
            for (int j = 0; j < prev; ++j)
                for (int i = 0; i < nk; ++i) GR.at(i, j) = d.at(i, j);
        }
        for (int i = 0; i < nk; ++i) GR.at(i, prev + i) = m;
    }
    Quot q;
    q.modulus = m;
    q.q = std::make_unique<LatticeQuotient>(std::move(BL), GR);
    return quot_.emplace(key, std::move(q)).first->second;
}

const CohomologyEngine::Basis& CohomologyEngine::cohomology(int k, const Int& m) const
{
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(k, m);
    auto it = basis_.find(key);
    if (it != basis_.end()) return it->second;

    Basis b;
    if (k < 0 || k > top()) {
        b.group = AbelianGroup::trivial();
        return basis_.emplace(key, std::move(b)).first->second;
    }
    const Quot& q = quotient(k, m);
    b.group = q.q->group();
    for (int i = 0; i < b.group.generator_count(); ++i) {
        std::vector<Int> small = q.q->representative(i);
        std::vector<Int> big = morse_->pull_cochain(k, small);
        if (m != 0)
            for (Int& v : big) v = mod_floor(v, m);
        b.classes.push_back(CohomClass{k, m, C_.id(), std::move(big)});
    }
    return basis_.emplace(key, std::move(b)).first->second;
}

AbelianGroup CohomologyEngine::homology(int k) const
{
    std::lock_guard<std::mutex> lock(mu_);
    auto it = homology_.find(k);
    if (it != homology_.end()) return it->second;

    AbelianGroup g;
    if (k < 0 || k > top()) {
        g = AbelianGroup::trivial();
    } else {
        const ChainComplex& S = morse_->reduced();
        IntMatrix bnd_k = k >= 1 ? S.boundary_dense(k) : IntMatrix(0, S.rank(0));
        IntMatrix BL = kernel_basis(bnd_k);
        IntMatrix GR(S.rank(k), k + 1 <= S.top() ? S.rank(k + 1) : 0);
        if (k + 1 <= S.top()) GR = S.boundary_dense(k + 1);
        g = LatticeQuotient(std::move(BL), GR).group();
    }
    return homology_.emplace(k, std::move(g)).first->second;
}

std::vector<Int> CohomologyEngine::decompose(const CohomClass& c) const
{
    if (c.complex_id != C_.id()) throw std::invalid_argument("decompose: class from another complex");
    std::vector<Int> small = morse_->push_cochain(c.degree, c.cochain);
    return decompose_small(c.degree, c.modulus, small);
}

std::vector<Int> CohomologyEngine::decompose_small(int k, const Int& m,
                                                   const std::vector<Int>& small_cochain) const
{
    std::lock_guard<std::mutex> lock(mu_);
    const Quot& q = quotient(k, m);
    return q.q->decompose(small_cochain);
}

CohomClass CohomologyEngine::class_from_coords(int k, const Int& m, const std::vector<Int>& coords) const
{
    const Basis& b = cohomology(k, m);
    if (int(coords.size()) != b.group.generator_count())
        throw std::invalid_argument("class_from_coords: coordinate length");
    CohomClass out = zero_class(k, m);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        for (size_t t = 0; t < out.cochain.size(); ++t)
            out.cochain[t] += coords[i] * b.classes[i].cochain[t];
    }
    if (m != 0)
        for (Int& v : out.cochain) v = mod_floor(v, m);
    return out;
}

CohomClass CohomologyEngine::zero_class(int k, const Int& m) const
{
    return CohomClass{k, m, C_.id(), std::vector<Int>(size_t(C_.rank(k)), Int(0))};
}

bool CohomologyEngine::is_cocycle(const CohomClass& c) const
{
    std::vector<Int> d = C_.coboundary_apply(c.degree, c.cochain);
    for (const Int& v : d) {
        if (c.modulus == 0) {
            if (v != 0) return false;
        } else if (v % c.modulus != 0) {
            return false;
        }
    }
    return true;
}

bool CohomologyEngine::same_class(const CohomClass& a, const CohomClass& b) const
{
    if (a.degree != b.degree || a.modulus != b.modulus) return false;
    return decompose(a) == decompose(b);
}

const TopStructure& CohomologyEngine::top_structure() const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (topstr_) return *topstr_;
    }
    if (!K_) throw std::invalid_argument("top_structure: synthetic chain complex input");
    if (!K_->is_pure()) throw std::invalid_argument("top_structure: complex is not pure");
    const int n = K_->dimension();

    // closed-pseudomanifold test: every ridge lies in exactly two facets
    if (n >= 1) {
        const SparseMat& b = C_.boundary(n);
        std::vector<int> deg(b.rows, 0);
        for (int j = 0; j < b.cols; ++j)
            for (const auto& [i, v] : b.col[j]) ++deg[i];
        for (int d : deg)
            if (d != 2) throw std::invalid_argument("top_structure: not a closed pseudomanifold");
    }

    TopStructure t;
    t.orientable = homology(n) == AbelianGroup::free(1);
    t.h1_zero = homology(1).is_trivial();
    t.fundamental_class_mod2.assign(size_t(C_.rank(n)), Int(1));

    std::lock_guard<std::mutex> lock(mu_);
    if (!topstr_) topstr_ = std::move(t);
    return *topstr_;
}

std::pair<AbelianGroup, std::vector<CohomClass>> cohomology(const ChainComplex& C, int k, const Int& m)
{
    CohomologyEngine eng(C);
    auto& b = eng.cohomology(k, m);
    return {b.group, b.classes};
}

TopStructure top_structure(const SimplicialComplex& K)
{
    CohomologyEngine eng(K);
    return eng.top_structure();
}

} // namespace concord
