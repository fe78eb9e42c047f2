#include <concord/oracle.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace concord::oracle {

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) { fn(idx); return; }
    for (;;) {
        fn(idx);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - (k - t)) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

// Hermite-style column reduction; pivots (row, col, value) in row order.
struct Hnf {
    IntMatrix H;
    std::vector<std::tuple<int, int, Int>> pivots;

    explicit Hnf(const IntMatrix& A) : H(A)
    {
        int c = 0;
        for (int r = 0; r < H.rows() && c < H.cols(); ++r) {
            // euclidean reduction across columns c.. on row r
            for (;;) {
                int best = -1;
                Int bestv = 0;
                for (int j = c; j < H.cols(); ++j) {
                    Int v = H.at(r, j) < 0 ? Int(-H.at(r, j)) : H.at(r, j);
                    if (v != 0 && (best < 0 || v < bestv)) { best = j; bestv = v; }
                }
                if (best < 0) break;
                H.swap_cols(c, best);
                if (H.at(r, c) < 0) H.negate_col(c);
                bool clean = true;
                for (int j = c + 1; j < H.cols(); ++j) {
                    if (H.at(r, j) == 0) continue;
                    Int q = H.at(r, j) / H.at(r, c);
                    H.add_col(c, j, -q);
                    if (H.at(r, j) != 0) clean = false;
                }
                if (clean) break;
            }
            if (H.at(r, c) != 0) {
                pivots.emplace_back(r, c, H.at(r, c));
                ++c;
            }
        }
    }

    // subtract pivot columns so every pivot row lands in [0, pivot)
    std::vector<Int> canonical(std::vector<Int> x) const
    {
        for (const auto& [r, c, h] : pivots) {
            Int rem = mod_floor(x[r], h);
            Int q = (x[r] - rem) / h;
            if (q != 0)
                for (int i = 0; i < H.rows(); ++i) x[i] -= q * H.at(i, c);
        }
        return x;
    }

    bool member(std::vector<Int> x) const
    {
        for (const auto& [r, c, h] : pivots) {
            if (x[r] % h != 0) return false;
            Int q = x[r] / h;
            if (q != 0)
                for (int i = 0; i < H.rows(); ++i) x[i] -= q * H.at(i, c);
        }
        for (const Int& v : x)
            if (v != 0) return false;
        return true;
    }
};

// odometer over per-coordinate candidate lists
bool advance(std::vector<size_t>& idx, const std::vector<size_t>& radix)
{
    for (size_t i = 0; i < idx.size(); ++i) {
        if (++idx[i] < radix[i]) return true;
        idx[i] = 0;
    }
    return false;
}

} // namespace

std::vector<Int> snf_diagonal_by_minors(const IntMatrix& A)
{
    const int n = std::min(A.rows(), A.cols());
    std::vector<Int> out(n, 0);
    Int prev = 1;
    for (int k = 1; k <= n; ++k) {
        Int g = 0;
        combinations(A.rows(), k, [&](const std::vector<int>& rows) {
            combinations(A.cols(), k, [&](const std::vector<int>& cols) {
                IntMatrix m(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) m.at(i, j) = A.at(rows[i], cols[j]);
                g = int_gcd(g, m.determinant());
            });
        });
        if (g == 0) break; // rank reached; remaining factors are zero
        out[k - 1] = g / prev;
        prev = g;
    }
    return out;
}

bool in_column_span(const IntMatrix& A, const std::vector<Int>& b)
{
    return Hnf(A).member(b);
}

Int cokernel_order_square(const IntMatrix& A)
{
    Int d = A.determinant();
    if (d == 0) throw std::invalid_argument("cokernel_order_square: singular matrix");
    return d < 0 ? -d : d;
}

Int cokernel_order_bfs(const IntMatrix& A, std::uint64_t bound)
{
    Hnf h(A);
    if (int(h.pivots.size()) < A.rows())
        throw std::invalid_argument("cokernel_order_bfs: infinite quotient");
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier{h.canonical(std::vector<Int>(A.rows(), 0))};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& x : frontier)
            for (int i = 0; i < A.rows(); ++i)
                for (int s : {1, -1}) {
                    std::vector<Int> y = x;
                    y[i] += s;
                    y = h.canonical(std::move(y));
                    if (seen.insert(y).second) {
                        if (seen.size() > bound)
                            throw std::invalid_argument("cokernel_order_bfs: size bound exceeded");
                        next.push_back(std::move(y));
                    }
                }
        frontier = std::move(next);
    }
    return Int(seen.size());
}

std::set<std::vector<Int>> brute_subgroup(const AbelianGroup& ambient,
                                          const std::vector<std::vector<Int>>& generators,
                                          std::uint64_t bound)
{
    if (!ambient.is_finite()) throw std::invalid_argument("brute_subgroup: infinite ambient");
    if (ambient.torsion_order() > bound)
        throw std::invalid_argument("brute_subgroup: size bound exceeded");
    const int gc = ambient.generator_count();
    auto reduce = [&](std::vector<Int> v) {
        for (int i = 0; i < gc; ++i) v[i] = mod_floor(v[i], ambient.generator_order(i));
        return v;
    };
    std::set<std::vector<Int>> elems{std::vector<Int>(gc, 0)};
    std::vector<std::vector<Int>> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                std::vector<Int> y(gc);
                for (int i = 0; i < gc; ++i) y[i] = x[i] + g[i];
                y = reduce(std::move(y));
                if (elems.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return elems;
}

BruteCohomology brute_cohomology(const ChainComplex& C, int k, const Int& m, std::uint64_t bound)
{
    if (m < 2) throw std::invalid_argument("brute_cohomology: m >= 2 required");
    const int nk = C.rank(k);
    const int nprev = C.rank(k - 1);
    Int total = 1;
    for (int i = 0; i < std::max(nk, nprev); ++i) {
        total *= m;
        if (total > bound) throw std::invalid_argument("brute_cohomology: size bound exceeded");
    }

    BruteCohomology out;
    // cocycles
    {
        std::vector<size_t> idx(nk, 0), radix(nk, size_t(to_i64(m)));
        do {
            std::vector<Int> x(nk);
            for (int i = 0; i < nk; ++i) x[i] = Int(std::uint64_t(idx[i]));
            std::vector<Int> dx = C.coboundary_apply(k, x);
            bool ok = true;
            for (const Int& v : dx) ok &= v % m == 0;
            if (ok) out.cocycles.push_back(std::move(x));
        } while (nk > 0 && advance(idx, radix));
        if (nk == 0) out.cocycles.push_back({});
    }
    // coboundaries
    std::set<std::vector<Int>> cob;
    {
        std::vector<size_t> idx(nprev, 0), radix(nprev, size_t(to_i64(m)));
        do {
            std::vector<Int> y(nprev);
            for (int i = 0; i < nprev; ++i) y[i] = Int(std::uint64_t(idx[i]));
            std::vector<Int> dy = k >= 1 ? C.coboundary_apply(k - 1, y) : std::vector<Int>(nk, 0);
            for (Int& v : dy) v = mod_floor(v, m);
            cob.insert(std::move(dy));
        } while (nprev > 0 && advance(idx, radix));
        if (nprev == 0) cob.insert(std::vector<Int>(nk, 0));
    }
    out.order = Int(out.cocycles.size()) / Int(cob.size());
    return out;
}

bool brute_is_coboundary(const ChainComplex& C, int k, const Int& m, const std::vector<Int>& z,
                         std::uint64_t bound)
{
    const int nprev = C.rank(k - 1);
    Int total = 1;
    for (int i = 0; i < nprev; ++i) {
        total *= m;
        if (total > bound) throw std::invalid_argument("brute_is_coboundary: size bound exceeded");
    }
    std::vector<size_t> idx(nprev, 0), radix(nprev, size_t(to_i64(m)));
    do {
        std::vector<Int> y(nprev);
        for (int i = 0; i < nprev; ++i) y[i] = Int(std::uint64_t(idx[i]));
        std::vector<Int> dy = k >= 1 ? C.coboundary_apply(k - 1, y) : std::vector<Int>(C.rank(k), 0);
        bool eq = true;
        for (size_t i = 0; i < dy.size(); ++i) eq &= (dy[i] - z[i]) % m == 0;
        if (eq) return true;
    } while (nprev > 0 && advance(idx, radix));
    return nprev == 0 && [&] {
        for (const Int& v : z)
            if (v % m != 0) return false;
        return true;
    }();
}

std::optional<std::vector<Int>> brute_bockstein(const ChainComplex& C, int r, int k,
                                                const std::vector<Int>& a_mod2, std::uint64_t bound)
{
    if (int(a_mod2.size()) != C.rank(k)) throw std::invalid_argument("brute_bockstein: shape");
    const int nk = int(a_mod2.size());
    const Int window = (Int(1) << r) + 2;
    std::vector<std::vector<Int>> cand(nk);
    for (int i = 0; i < nk; ++i)
        for (Int v = -window; v <= window; ++v)
            if (mod_floor(v, 2) == mod_floor(a_mod2[i], 2)) cand[i].push_back(v);
    Int total = 1;
    for (int i = 0; i < nk; ++i) {
        total *= Int(cand[i].size());
        if (total > bound) throw std::invalid_argument("brute_bockstein: window exceeded");
    }

    const Int denom = Int(1) << r;
    std::vector<size_t> idx(nk, 0), radix(nk);
    for (int i = 0; i < nk; ++i) radix[i] = cand[i].size();
    do {
        std::vector<Int> lift(nk);
        for (int i = 0; i < nk; ++i) lift[i] = cand[i][idx[i]];
        std::vector<Int> d = C.coboundary_apply(k, lift);
        bool ok = true;
        for (const Int& v : d) ok &= v % denom == 0;
        if (ok) {
            std::vector<Int> val(d.size());
            for (size_t i = 0; i < d.size(); ++i) val[i] = mod_floor(d[i] / denom, 2);
            return val;
        }
    } while (nk > 0 && advance(idx, radix));
    return std::nullopt;
}

std::optional<std::vector<Int>> brute_d2(const ChainComplex& C, int k, const std::vector<Int>& a_mod4)
{
    if (int(a_mod4.size()) != C.rank(k)) throw std::invalid_argument("brute_d2: shape");
    const int nk = int(a_mod4.size());
    for (int i = 0; i < nk; ++i) lift[i] = mod_floor(a_mod4[i], 4);
    std::vector<Int> d = C.coboundary_apply(k, lift);
    std::vector<Int> val(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] % 4 != 0) return std::nullopt; // not a mod-4 cocycle
        val[i] = mod_floor(d[i] / 4, 2);
    }
    return val;
}

} // namespace concord::oracle
