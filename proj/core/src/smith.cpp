#include <concord/smith.hpp>

#include <stdexcept>

namespace concord {

int SmithResult::rank() const
{
    int r = 0;
    const int n = std::min(S.rows(), S.cols());
    for (int i = 0; i < n; ++i)
        if (S.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithResult::diagonal() const
{
    const int n = std::min(S.rows(), S.cols());
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = S.at(i, i);
    return d;
}

namespace {

struct Reducer {
    IntMatrix S, U, Uinv, V, Vinv;

    explicit Reducer(const IntMatrix& A)
        : S(A),
          U(IntMatrix::identity(A.rows())), Uinv(IntMatrix::identity(A.rows())),
          V(IntMatrix::identity(A.cols())), Vinv(IntMatrix::identity(A.cols()))
    {}

    void swap_rows(int a, int b)
    {
        S.swap_rows(a, b); U.swap_rows(a, b); Uinv.swap_cols(a, b);
    }
    void swap_cols(int a, int b)
    {
        S.swap_cols(a, b); V.swap_cols(a, b); Vinv.swap_rows(a, b);
    }
    void add_row(int src, int dst, const Int& c)
    {
        S.add_row(src, dst, c); U.add_row(src, dst, c); Uinv.add_col(dst, src, -c);
    }
    void add_col(int src, int dst, const Int& c)
    {
        S.add_col(src, dst, c); V.add_col(src, dst, c); Vinv.add_row(dst, src, -c);
    }
    void negate_row(int i) { S.negate_row(i); U.negate_row(i); Uinv.negate_col(i); }

    // smallest-magnitude nonzero entry in the trailing submatrix
    bool find_pivot(int t, int& pi, int& pj) const
    {
        bool found = false;
        Int best = 0;
        for (int i = t; i < S.rows(); ++i)
            for (int j = t; j < S.cols(); ++j) {
                const Int& v = S.at(i, j);
                if (v == 0) continue;
                Int a = v < 0 ? Int(-v) : v;
                if (!found || a < best) { found = true; best = a; pi = i; pj = j; }
            }
        return found;
    }

    void run()
    {
        const int n = std::min(S.rows(), S.cols());
        for (int t = 0; t < n; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            for (;;) {
                if (S.at(t, t) < 0) negate_row(t);
                bool clean = true;
                for (int i = t + 1; i < S.rows(); ++i) {
                    if (S.at(i, t) == 0) continue;
                    Int q = S.at(i, t) / S.at(t, t);
                    if (q != 0) add_row(t, i, -q);
                    if (S.at(i, t) != 0) { swap_rows(t, i); clean = false; }
                }
                if (!clean) continue;
                for (int j = t + 1; j < S.cols(); ++j) {
                    if (S.at(t, j) == 0) continue;
                    Int q = S.at(t, j) / S.at(t, t);
                    if (q != 0) add_col(t, j, -q);
                    if (S.at(t, j) != 0) { swap_cols(t, j); clean = false; }
                }
                if (!clean) continue;

                // enforce s_t | s_ij on the trailing block
                bool divides = true;
                for (int i = t + 1; i < S.rows() && divides; ++i)
                    for (int j = t + 1; j < S.cols() && divides; ++j)
                        if (S.at(i, j) % S.at(t, t) != 0) {
                            add_row(i, t, 1);
                            divides = false;
                        }
                if (divides) break;
            }
        }
    }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& A)
{
    Reducer r(A);
    r.run();
    return SmithResult{std::move(r.U), std::move(r.Uinv), std::move(r.S),
                       std::move(r.V), std::move(r.Vinv)};
}

IntMatrix kernel_basis(const SmithResult& snf)
{
    const int cols = snf.S.cols();
    const int n = std::min(snf.S.rows(), cols);
    std::vector<int> zero_cols;
    for (int j = 0; j < cols; ++j)
        if (j >= n || snf.S.at(j, j) == 0) zero_cols.push_back(j);
    IntMatrix K(cols, int(zero_cols.size()));
    for (size_t c = 0; c < zero_cols.size(); ++c)
        for (int i = 0; i < cols; ++i)
            K.at(i, int(c)) = snf.V.at(i, zero_cols[c]);
    return K;
}

IntMatrix kernel_basis(const IntMatrix& A) { return kernel_basis(smith_normal_form(A)); }

std::optional<std::vector<Int>> solve_exact(const SmithResult& snf, const std::vector<Int>& b)
{
    if (int(b.size()) != snf.S.rows()) throw std::invalid_argument("solve_exact: shape");
    std::vector<Int> ub = snf.U.apply(b);
    std::vector<Int> y(snf.S.cols(), 0);
    const int n = std::min(snf.S.rows(), snf.S.cols());
    for (int i = 0; i < snf.S.rows(); ++i) {
        const Int s = i < n ? snf.S.at(i, i) : Int(0);
        if (s == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % s != 0) return std::nullopt;
            y[i] = ub[i] / s;
        }
    }
    return snf.V.apply(y);
}

AbelianGroup cokernel_group(const IntMatrix& A)
{
    SmithResult snf = smith_normal_form(A);
    std::vector<Int> tors;
    int nonzero = 0;
    for (const Int& s : snf.diagonal())
        if (s != 0) {
            ++nonzero;
            if (s >= 2) tors.push_back(s);
        }
    return AbelianGroup(A.rows() - nonzero, std::move(tors));
}

LatticeQuotient::LatticeQuotient(IntMatrix BL, const IntMatrix& GR)
    : BL_(std::move(BL)), BLsnf_(smith_normal_form(BL_))
{
    if (BLsnf_.rank() != BL_.cols())
        throw std::invalid_argument("LatticeQuotient: basis matrix not of full column rank");

    // relation coordinates: X with BL * X = GR
    IntMatrix X(BL_.cols(), GR.cols());
    for (int j = 0; j < GR.cols(); ++j) {
        auto x = solve_exact(BLsnf_, GR.column(j));
        if (!x) throw std::invalid_argument("LatticeQuotient: relation outside the lattice");
        for (int i = 0; i < BL_.cols(); ++i) X.at(i, j) = (*x)[i];
    }

    SmithResult xs = smith_normal_form(X);
    Uprime_ = xs.U;
    Btil_ = BL_.mul(xs.Uinv);

    const int r = BL_.cols();
    const int n = std::min(X.rows(), X.cols());
    std::vector<int> free_cols, tor_cols;
    std::vector<Int> tor_orders;
    for (int j = 0; j < r; ++j) {
        const Int s = j < n ? xs.S.at(j, j) : Int(0);
        if (s == 0) free_cols.push_back(j);
        else if (s >= 2) { tor_cols.push_back(j); tor_orders.push_back(s); }
        // s == 1: generator dies in the quotient
    }
    gencol_ = free_cols;
    gencol_.insert(gencol_.end(), tor_cols.begin(), tor_cols.end());
    genord_.assign(free_cols.size(), 0);
    genord_.insert(genord_.end(), tor_orders.begin(), tor_orders.end());
    group_ = AbelianGroup(int(free_cols.size()), tor_orders);
}

std::vector<Int> LatticeQuotient::representative(int i) const
{
    return Btil_.column(gencol_[size_t(i)]);
}

std::vector<Int> LatticeQuotient::decompose(const std::vector<Int>& z) const
{
    auto y = solve_exact(BLsnf_, z);
    if (!y) throw std::invalid_argument("LatticeQuotient::decompose: vector not in the lattice");
    std::vector<Int> c = Uprime_.apply(*y);
    std::vector<Int> out(gencol_.size());
    for (size_t i = 0; i < gencol_.size(); ++i) {
        out[i] = c[gencol_[i]];
        if (genord_[i] != 0) out[i] = mod_floor(out[i], genord_[i]);
    }
    return out;
}

} // namespace concord
