#include <concord/ops.hpp>

#include <algorithm>
#include <stdexcept>

namespace concord {

bool OperationMatrix::is_zero() const
{
    for (const Int& v : entries)
        if (v != 0) return false;
    return true;
}

bool OperationMatrix::all_defined() const
{
    for (char c : defined)
        if (!c) return false;
    return true;
}

std::vector<Int> OperationMatrix::apply(const std::vector<Int>& coords) const
{
    if (int(coords.size()) != cols) throw std::invalid_argument("OperationMatrix::apply: shape");
    std::vector<Int> out(rows, 0);
    for (int j = 0; j < cols; ++j) {
        if (coords[j] == 0) continue;
        for (int i = 0; i < rows; ++i) out[i] += at(i, j) * coords[j];
    }
    if (target_modulus != 0)
        for (Int& v : out) v = mod_floor(v, target_modulus);
    return out;
}

namespace {

const SimplicialComplex& need_simplicial(const CohomologyEngine& E, const char* what)
{
    if (!E.simplicial())
        throw std::invalid_argument(std::string(what) + ": synthetic chain complex input");
    return *E.simplicial();
}

void check_class(const CohomologyEngine& E, const CohomClass& a)
{
    if (a.complex_id != E.id()) throw std::invalid_argument("class belongs to another complex");
    if (int(a.cochain.size()) != E.complex().rank(a.degree))
        throw std::invalid_argument("class cochain has wrong length");
}

} // namespace

CohomClass cup(const CohomologyEngine& E, const CohomClass& a, const CohomClass& b)
{
    const SimplicialComplex& K = need_simplicial(E, "cup");
    check_class(E, a);
    check_class(E, b);
    if (a.modulus != b.modulus) throw std::invalid_argument("cup: coefficient moduli differ");
    const int p = a.degree, q = b.degree;
    const Int m = a.modulus;

    CohomClass out = E.zero_class(p + q, m);
    const auto& cells = K.simplices(p + q);
    Simplex front(p + 1), back(q + 1);
    for (size_t j = 0; j < cells.size(); ++j) {
        const Simplex& s = cells[j];
        std::copy(s.begin(), s.begin() + p + 1, front.begin());
        std::copy(s.begin() + p, s.end(), back.begin());
        const Int& av = a.cochain[K.index_of(p, front)];
        if (av == 0) continue;
        const Int& bv = b.cochain[K.index_of(q, back)];
        if (bv == 0) continue;
        out.cochain[j] = m == 0 ? av * bv : mod_floor(av * bv, m);
    }
    return out;
}

std::vector<Int> cup_i(const CohomologyEngine& E, const CohomClass& a, const CohomClass& b, int i)
{
    const SimplicialComplex& K = need_simplicial(E, "cup_i");
    check_class(E, a);
    check_class(E, b);
    if (i < 0) throw std::invalid_argument("cup_i: negative i");
    if (a.modulus != 2 || b.modulus != 2) throw std::invalid_argument("cup_i: mod 2 only");
    const int p = a.degree, q = b.degree;
    const int n = p + q - i; // output degree

    std::vector<Int> out(size_t(std::max(E.complex().rank(n), 0)), 0);
    if (n < 0) return out;

    const auto& cells = K.simplices(n);
    // overlapping blocks cut at j_0 < j_1 < ... < j_i: the first factor reads
    // [0..j0], [j1..j2], ...; the second [j0..j1], [j2..j3], ...
    std::vector<int> cuts(i + 1);
    Simplex A, B;
    for (size_t c = 0; c < cells.size(); ++c) {
        const Simplex& s = cells[c];
        int parity = 0;
        for (int t = 0; t <= i; ++t) cuts[t] = t;
        for (;;) {
            A.clear();
            B.clear();
            int prev = 0;
            bool to_a = true;
            for (int t = 0; t <= i + 1; ++t) {
                const int end = t <= i ? cuts[t] : n;
                auto& dst = to_a ? A : B;
                for (int v = prev; v <= end; ++v) dst.push_back(s[v]);
                prev = end;
                to_a = !to_a;
            }
            if (int(A.size()) == p + 1 && int(B.size()) == q + 1) {
                int ia = K.index_of(p, A);
                int ib = K.index_of(q, B);
                if (ia >= 0 && ib >= 0 && a.cochain[ia] % 2 != 0 && b.cochain[ib] % 2 != 0)
                    parity ^= 1;
            }
            // next strictly increasing cut sequence in [0, n]
            int t = i;
            while (t >= 0 && cuts[t] == n - (i - t)) --t;
            if (t < 0) break;
            ++cuts[t];
            for (int u = t + 1; u <= i; ++u) cuts[u] = cuts[u - 1] + 1;
        }
        out[c] = parity;
    }
    return out;
}

CohomClass steenrod_sq(const CohomologyEngine& E, int k, const CohomClass& a)
{
    need_simplicial(E, "steenrod_sq");
    check_class(E, a);
    if (a.modulus != 2) throw std::invalid_argument("steenrod_sq: mod 2 class required");
    if (k < 0) throw std::invalid_argument("steenrod_sq: negative k");
    const int p = a.degree;
    if (k == 0) return a;
    if (k > p) return E.zero_class(p + k, 2);
    if (k == 3) return steenrod_sq(E, 1, steenrod_sq(E, 2, a)); // Sq^3 = Sq^1 Sq^2
    std::vector<Int> c = cup_i(E, a, a, p - k);
    return CohomClass{p + k, 2, E.id(), std::move(c)};
}

std::optional<CohomClass> bockstein_higher(const CohomologyEngine& E, int r, const CohomClass& a)
{
    check_class(E, a);
    if (r < 1) throw std::invalid_argument("bockstein_higher: r >= 1 required");
    if (a.modulus != 2) throw std::invalid_argument("bockstein_higher: mod 2 class required");
    const int k = a.degree;
    const ChainComplex& S = E.reduction().reduced();

    std::vector<Int> z = E.reduction().push_cochain(k, a.cochain);
    IntMatrix delta = S.coboundary_dense(k);
    std::vector<Int> c = delta.apply(z);
    for (Int& v : c) {
        if (v % 2 != 0) throw std::invalid_argument("bockstein_higher: input is not a mod-2 cocycle");
        v /= 2;
    }

    // solve delta x = -c  (mod 2^{r-1}); then (z + 2x) lifts to stage r
    std::vector<Int> x(size_t(S.rank(k)), 0);
    if (r >= 2) {
        Int mod = Int(1) << (r - 1);
        IntMatrix ext(delta.rows(), delta.cols() + delta.rows());
        for (int i = 0; i < delta.rows(); ++i) {
            for (int j = 0; j < delta.cols(); ++j) ext.at(i, j) = delta.at(i, j);
            ext.at(i, delta.cols() + i) = mod;
        }
        std::vector<Int> rhs(c.size());
        for (size_t i = 0; i < c.size(); ++i) rhs[i] = -c[i];
        auto sol = solve_exact(smith_normal_form(ext), rhs);
        if (!sol) return std::nullopt; // no lift: obstructed before stage r
        for (int j = 0; j < delta.cols(); ++j) x[j] = (*sol)[j];
    }

    // value = delta(z + 2x) / 2^r  (mod 2)
    std::vector<Int> lifted(z.size());
    for (size_t i = 0; i < z.size(); ++i) lifted[i] = z[i] + 2 * x[i];
    std::vector<Int> num = delta.apply(lifted);
    Int denom = Int(1) << r;
    std::vector<Int> val(num.size());
    for (size_t i = 0; i < num.size(); ++i) {
        if (num[i] % denom != 0) throw std::logic_error("bockstein_higher: lift failed divisibility");
        val[i] = mod_floor(num[i] / denom, 2);
    }

    std::vector<Int> coords = E.decompose_small(k + 1, 2, val);
    coords = f2_reduce(std::move(coords), bockstein_image(E, r - 1, k));
    return E.class_from_coords(k + 1, 2, coords);
}

std::vector<std::vector<Int>> bockstein_image(const CohomologyEngine& E, int s, int k)
{
    if (s <= 0) return {};
    const ChainComplex& S = E.reduction().reduced();
    IntMatrix delta = S.coboundary_dense(k);
    const int nk = S.rank(k);
    const Int mod = Int(1) << s;

    // basis of {x : delta x = 0 mod 2^s} via the Smith form of delta
    SmithResult snf = smith_normal_form(delta);
    const int n = std::min(delta.rows(), delta.cols());
    std::vector<std::vector<Int>> values;
    for (int j = 0; j < nk; ++j) {
        Int sj = j < n ? snf.S.at(j, j) : Int(0);
        Int mj = mod / int_gcd(sj, mod);
        std::vector<Int> x(nk);
        for (int i = 0; i < nk; ++i) x[i] = snf.V.at(i, j) * mj;
        std::vector<Int> dx = delta.apply(x);
        std::vector<Int> val(dx.size());
        for (size_t i = 0; i < dx.size(); ++i) val[i] = mod_floor(dx[i] / mod, 2);
        values.push_back(E.decompose_small(k + 1, 2, val));
    }
    return f2_echelon(std::move(values));
}

CohomClass d2_connecting(const CohomologyEngine& E, const CohomClass& a)
{
    check_class(E, a);
    if (a.modulus != 4) throw std::invalid_argument("d2_connecting: mod 4 class required");
    const int k = a.degree;
    const ChainComplex& S = E.reduction().reduced();

    std::vector<Int> z = E.reduction().push_cochain(k, a.cochain);
    std::vector<Int> dz = S.coboundary_dense(k).apply(z);
    std::vector<Int> val(dz.size());
    for (size_t i = 0; i < dz.size(); ++i) {
        if (dz[i] % 4 != 0) throw std::invalid_argument("d2_connecting: input is not a mod-4 cocycle");
        val[i] = mod_floor(dz[i] / 4, 2);
    }
    std::vector<Int> coords = E.decompose_small(k + 1, 2, val);
    return E.class_from_coords(k + 1, 2, coords);
}

CohomClass sq2_d2(const CohomologyEngine& E, const CohomClass& a)
{
    need_simplicial(E, "sq2_d2");
    return steenrod_sq(E, 2, d2_connecting(E, a));
}

namespace {

Int pair_with_fundamental(const CohomologyEngine& E, const CohomClass& top_cochain)
{
    Int acc = 0;
    for (const Int& v : top_cochain.cochain) acc += v;
    return mod_floor(acc, 2);
}

// solve P c = rhs over F2; nullopt when inconsistent
std::optional<std::vector<Int>> f2_solve(std::vector<std::vector<Int>> P, std::vector<Int> rhs)
{
    const int rows = int(P.size());
    const int cols = rows ? int(P[0].size()) : 0;
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (P[i][j] % 2 != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(P[p], P[r]);
        std::swap(rhs[p], rhs[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || P[i][j] % 2 == 0) continue;
            for (int t = 0; t < cols; ++t) P[i][t] = mod_floor(P[i][t] + P[r][t], 2);
            rhs[i] = mod_floor(rhs[i] + rhs[r], 2);
        }
        pivot_col[r] = j;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (mod_floor(rhs[i], 2) != 0) return std::nullopt;
    std::vector<Int> c(cols, 0);
    for (int i = 0; i < r; ++i) c[pivot_col[i]] = mod_floor(rhs[i], 2);
    return c;
}

// Wu class v_k: <v_k u x, [M]> = <Sq^k x, [M]> for all x in H^{n-k}(;Z/2)
CohomClass wu_class(const CohomologyEngine& E, int k)
{
    const int n = E.top();
    const auto& Hk = E.cohomology(k, 2);
    const auto& Hnk = E.cohomology(n - k, 2);
    if (Hk.group.is_trivial() || Hnk.group.is_trivial()) return E.zero_class(k, 2);

    const int t = Hk.group.generator_count();
    const int s = Hnk.group.generator_count();
    std::vector<std::vector<Int>> P(s, std::vector<Int>(t));
    std::vector<Int> rhs(s);
    for (int j = 0; j < s; ++j) {
        const CohomClass& x = Hnk.classes[j];
        for (int i = 0; i < t; ++i)
            P[j][i] = pair_with_fundamental(E, cup(E, Hk.classes[i], x));
        rhs[j] = pair_with_fundamental(E, steenrod_sq(E, k, x));
    }
    // Poincare duality makes the pairing nonsingular on closed manifolds;
    // with t == s a consistent solve below is automatically unique.
    auto c = f2_solve(P, rhs);
    if (!c || t != s)
        throw std::invalid_argument("wu_and_sw: singular intersection pairing (non-manifold input)");
    return E.class_from_coords(k, 2, *c);
}

} // namespace

WuData wu_and_sw(const CohomologyEngine& E)
{
    need_simplicial(E, "wu_and_sw");
    E.top_structure(); // validates the closed-pseudomanifold requirements

    WuData w;
    w.v1 = wu_class(E, 1);
    w.v2 = wu_class(E, 2);
    w.w1 = w.v1;
    CohomClass sq1v1 = steenrod_sq(E, 1, w.v1);
    w.w2 = E.zero_class(2, 2);
    for (size_t i = 0; i < w.w2.cochain.size(); ++i)
        w.w2.cochain[i] = mod_floor(sq1v1.cochain[i] + w.v2.cochain[i], 2);

    auto zero1 = E.decompose(w.w1);
    auto zero2 = E.decompose(w.w2);
    auto all_zero = [](const std::vector<Int>& v) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    };
    w.spin = all_zero(zero1) && all_zero(zero2);
    return w;
}

std::vector<std::vector<Int>> f2_echelon(std::vector<std::vector<Int>> rows)
{
    // reduced row echelon form: pivots strictly increasing and each pivot
    // column cleared everywhere else, so coset reduction is canonical
    std::vector<std::vector<Int>> basis;
    if (rows.empty()) return basis;
    const size_t width = rows[0].size();
    for (auto& v : rows)
        for (Int& x : v) x = mod_floor(x, 2);
    size_t r = 0;
    for (size_t j = 0; j < width && r < rows.size(); ++j) {
        size_t p = r;
        while (p < rows.size() && rows[p][j] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][j] == 0) continue;
            for (size_t t = j; t < width; ++t) rows[i][t] = mod_floor(rows[i][t] + rows[r][t], 2);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Int> f2_reduce(std::vector<Int> v, const std::vector<std::vector<Int>>& echelon)
{
    for (Int& x : v) x = mod_floor(x, 2);
    for (const auto& b : echelon) {
        int lead = -1;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) { lead = int(j); break; }
        if (lead >= 0 && v[lead] != 0)
            for (size_t j = 0; j < v.size(); ++j) v[j] = mod_floor(v[j] + b[j], 2);
    }
    return v;
}

bool f2_in_span(const std::vector<Int>& v, const std::vector<std::vector<Int>>& echelon)
{
    std::vector<Int> r = f2_reduce(v, echelon);
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

} // namespace concord
