#include <concord/chain.hpp>

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace concord {

namespace {
std::atomic<std::uint64_t> next_synthetic_id{std::uint64_t(1) << 32};
}

SparseMat SparseMat::from_dense(const IntMatrix& m)
{
    SparseMat s(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) s.col[j].emplace_back(i, m.at(i, j));
    return s;
}

IntMatrix SparseMat::to_dense() const
{
    IntMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) m.at(i, j) = v;
    return m;
}

std::vector<Int> SparseMat::apply(const std::vector<Int>& x) const
{
    if (int(x.size()) != cols) throw std::invalid_argument("SparseMat::apply: shape");
    std::vector<Int> y(rows);
    for (int j = 0; j < cols; ++j) {
        if (x[j] == 0) continue;
        for (const auto& [i, v] : col[j]) y[i] += v * x[j];
    }
    return y;
}

std::vector<Int> SparseMat::apply_transpose(const std::vector<Int>& x) const
{
    if (int(x.size()) != rows) throw std::invalid_argument("SparseMat::apply_transpose: shape");
    std::vector<Int> y(cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j])
            if (x[i] != 0) y[j] += v * x[i];
    return y;
}

std::size_t SparseMat::nnz() const
{
    std::size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
}

ChainComplex ChainComplex::from_boundaries(std::vector<int> ranks, std::vector<SparseMat> boundaries,
                                           std::uint64_t complex_id)
{
    ChainComplex C;
    C.id_ = complex_id ? complex_id : next_synthetic_id.fetch_add(1);
    C.ranks_ = std::move(ranks);
    C.bnd_ = std::move(boundaries);
    if (C.bnd_.size() != C.ranks_.size())
        throw std::invalid_argument("ChainComplex: need one boundary slot per degree");
    for (int k = 1; k <= C.top(); ++k) {
        const SparseMat& b = C.bnd_[k];
        if (b.rows != C.ranks_[k - 1] || b.cols != C.ranks_[k])
            throw std::invalid_argument("ChainComplex: boundary shape mismatch");
    }
    // dd = 0, checked column by column with a local accumulator
    std::vector<std::pair<int, Int>> acc;
    for (int k = 2; k <= C.top(); ++k) {
        const SparseMat& b = C.bnd_[k];
        const SparseMat& a = C.bnd_[k - 1];
        for (int j = 0; j < b.cols; ++j) {
            acc.clear();
            for (const auto& [i, v] : b.col[j])
                for (const auto& [r, w] : a.col[i]) acc.emplace_back(r, v * w);
            std::sort(acc.begin(), acc.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (size_t t = 0; t < acc.size();) {
                Int sum = 0;
                size_t u = t;
                while (u < acc.size() && acc[u].first == acc[t].first) sum += acc[u++].second;
                if (sum != 0) throw std::invalid_argument("ChainComplex: dd != 0");
                t = u;
            }
        }
    }
    return C;
}

const SparseMat& ChainComplex::boundary(int k) const
{
    static const SparseMat empty;
    if (k < 1 || k > top()) return empty;
    return bnd_[k];
}

IntMatrix ChainComplex::coboundary_dense(int k) const
{
    if (k < 0 || k > top()) return IntMatrix(0, 0);
    if (k == top()) return IntMatrix(0, ranks_[k]);
    return boundary(k + 1).to_dense().transpose();
}

std::vector<Int> ChainComplex::coboundary_apply(int k, const std::vector<Int>& x) const
{
    if (int(x.size()) != rank(k)) throw std::invalid_argument("coboundary_apply: shape");
    if (k >= top()) return std::vector<Int>(rank(k + 1));
    return boundary(k + 1).apply_transpose(x);
}

ChainComplex chain_complex(const SimplicialComplex& K)
{
    const int n = K.dimension();
    std::vector<int> ranks(n + 1);
    for (int d = 0; d <= n; ++d) ranks[d] = K.count(d);

    std::vector<SparseMat> bnd(n + 1);
    for (int k = 1; k <= n; ++k) {
        SparseMat b(ranks[k - 1], ranks[k]);
        const auto& cells = K.simplices(k);
        Simplex face(k);
        for (int j = 0; j < int(cells.size()); ++j) {
            const Simplex& s = cells[j];
            for (int drop = 0; drop <= k; ++drop) {
                int w = 0;
                for (int i = 0; i <= k; ++i)
                    if (i != drop) face[w++] = s[i];
                int r = K.index_of(k - 1, face);
                b.col[j].emplace_back(r, (drop % 2 == 0) ? Int(1) : Int(-1));
            }
            std::sort(b.col[j].begin(), b.col[j].end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        bnd[k] = std::move(b);
    }
    return ChainComplex::from_boundaries(std::move(ranks), std::move(bnd), K.id());
}

ChainComplex moore_chain_complex(const Int& m, int k)
{
    if (m < 2) throw std::invalid_argument("moore_chain_complex: m must be >= 2");
    if (k < 1) throw std::invalid_argument("moore_chain_complex: degree must be >= 1");
    std::vector<int> ranks(k + 2, 0);
    ranks[k] = 1;
    ranks[k + 1] = 1;
    std::vector<SparseMat> bnd(k + 2);
    for (int d = 1; d <= k + 1; ++d) bnd[d] = SparseMat(ranks[d - 1], ranks[d]);
    bnd[k + 1].col[0].emplace_back(0, m);
    return ChainComplex::from_boundaries(std::move(ranks), std::move(bnd));
}

} // namespace concord
