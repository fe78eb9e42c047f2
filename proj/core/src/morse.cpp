#include <concord/morse.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace concord {

namespace {

using Col = std::vector<std::pair<int, Int>>; // sorted by row

struct Work {
    int top;
    std::vector<int> ranks;
    // per degree k = 1..top, the boundary matrix C_k -> C_{k-1}
    std::vector<std::vector<Col>> cols;            // cols[k][j]
    std::vector<std::vector<int>> colnnz;          // [k][j]
    std::vector<std::vector<int>> rownnz;          // [k][i], i a cell of degree k-1
    std::vector<std::vector<std::vector<int>>> rowlist; // stale-tolerant row -> columns
    std::vector<std::vector<char>> alive;          // [deg][cell]

    std::deque<std::pair<int, int>> rowq, colq;    // zero-fill candidates
    std::set<std::tuple<int, int, int>> pq;        // (colnnz, k, j)
    std::set<std::pair<int, int>> skipped;         // columns with no unit entry

    const Int* entry(int k, int j, int i) const
    {
        const Col& c = cols[k][j];
        auto it = std::lower_bound(c.begin(), c.end(), i,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it == c.end() || it->first != i) return nullptr;
        return &it->second;
    }

    bool col_alive(int k, int j) const { return alive[k][j] != 0; }
    bool row_alive(int k, int i) const { return alive[k - 1][i] != 0; }

    void pq_erase(int k, int j) { pq.erase({colnnz[k][j], k, j}); skipped.erase({k, j}); }
    void pq_insert(int k, int j)
    {
        if (colnnz[k][j] > 0) {
            pq.insert({colnnz[k][j], k, j});
            if (colnnz[k][j] == 1) colq.emplace_back(k, j);
        }
    }

    void row_dec(int k, int i)
    {
        if (--rownnz[k][i] == 1) rowq.emplace_back(k, i);
    }
};

} // namespace

MorseReduction::MorseReduction(const ChainComplex& C)
{
    const int top = C.top();
    orig_ranks_.resize(top + 1);
    for (int k = 0; k <= top; ++k) orig_ranks_[k] = C.rank(k);

    Work w;
    w.top = top;
    w.ranks = orig_ranks_;
    w.cols.resize(top + 1);
    w.colnnz.resize(top + 1);
    w.rownnz.resize(top + 1);
    w.rowlist.resize(top + 1);
    w.alive.resize(top + 1);
    for (int k = 0; k <= top; ++k) w.alive[k].assign(C.rank(k), 1);
    for (int k = 1; k <= top; ++k) {
        const SparseMat& b = C.boundary(k);
        w.cols[k].assign(b.cols, {});
        w.colnnz[k].assign(b.cols, 0);
        w.rownnz[k].assign(b.rows, 0);
        w.rowlist[k].assign(b.rows, {});
        for (int j = 0; j < b.cols; ++j) {
            w.cols[k][j] = b.col[j];
            w.colnnz[k][j] = int(b.col[j].size());
            for (const auto& [i, v] : b.col[j]) {
                ++w.rownnz[k][i];
                w.rowlist[k][i].push_back(j);
            }
        }
        for (int j = 0; j < b.cols; ++j) w.pq_insert(k, j);
        for (int i = 0; i < b.rows; ++i)
            if (w.rownnz[k][i] == 1) w.rowq.emplace_back(k, i);
    }

    auto eliminate = [&](int k, int a, int b) {
        // alpha = row b without column a (also compacts the row list)
        std::vector<std::pair<int, Int>> alpha;
        for (int c : w.rowlist[k][b]) {
            if (c == a || !w.col_alive(k, c)) continue;
            if (const Int* v = w.entry(k, c, b)) {
                if (!alpha.empty() && alpha.back().first == c) continue; // duplicate listing
                alpha.emplace_back(c, *v);
            }
        }
        std::sort(alpha.begin(), alpha.end());
        alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());

        const Int* up = w.entry(k, a, b);
        if (!up || (*up != 1 && *up != -1)) throw std::logic_error("morse: pivot not a unit");
        const Int u = *up;

        std::vector<std::pair<int, Int>> beta;
        beta.reserve(w.cols[k][a].size());
        for (const auto& [r, v] : w.cols[k][a])
            if (r != b) beta.emplace_back(r, v);

        log_.push_back({k, a, b, u, alpha, beta});

        // column updates: col_c -= (u * alpha_c) * beta, row b dropped
        for (const auto& [c, ac] : alpha) {
            w.pq_erase(k, c);
            const Int f = -(u * ac);
            Col merged;
            merged.reserve(w.cols[k][c].size() + beta.size());
            auto itc = w.cols[k][c].begin(), endc = w.cols[k][c].end();
            auto itb = beta.begin(), endb = beta.end();
            while (itc != endc || itb != endb) {
                if (itc != endc && itc->first == b) { ++itc; continue; } // dropped row
                int rc = itc != endc ? itc->first : INT32_MAX;
                int rb = itb != endb ? itb->first : INT32_MAX;
                if (rc < rb) {
                    merged.emplace_back(*itc++);
                } else if (rb < rc) {
                    Int nv = f * itb->second;
                    merged.emplace_back(itb->first, std::move(nv));
                    ++w.rownnz[k][rb];
                    w.rowlist[k][rb].push_back(c);
                    ++itb;
                } else {
                    Int nv = itc->second + f * itb->second;
                    if (nv == 0) w.row_dec(k, rc);
                    else merged.emplace_back(rc, std::move(nv));
                    ++itc; ++itb;
                }
            }
            w.cols[k][c] = std::move(merged);
            w.colnnz[k][c] = int(w.cols[k][c].size());
            w.pq_insert(k, c);
        }

        // drop column a; its beta rows lose one entry
        w.pq_erase(k, a);
        for (const auto& [r, v] : beta) w.row_dec(k, r);
        w.cols[k][a].clear();
        w.colnnz[k][a] = 0;
        w.rownnz[k][b] = 0;
        w.rowlist[k][b].clear();

        // cell a is a row of boundary(k+1)
        if (k + 1 <= w.top) {
            for (int c : w.rowlist[k + 1][a]) {
                if (!w.col_alive(k + 1, c)) continue;
                Col& cc = w.cols[k + 1][c];
                auto it = std::lower_bound(cc.begin(), cc.end(), a,
                                           [](const auto& e, int row) { return e.first < row; });
                if (it != cc.end() && it->first == a) {
                    w.pq_erase(k + 1, c);
                    cc.erase(it);
                    w.colnnz[k + 1][c] = int(cc.size());
                    w.pq_insert(k + 1, c);
                }
            }
            w.rownnz[k + 1][a] = 0;
            w.rowlist[k + 1][a].clear();
        }

        // cell b is a column of boundary(k-1)
        if (k - 1 >= 1) {
            w.pq_erase(k - 1, b);
            for (const auto& [r, v] : w.cols[k - 1][b]) w.row_dec(k - 1, r);
            w.cols[k - 1][b].clear();
            w.colnnz[k - 1][b] = 0;
        }

        w.alive[k][a] = 0;
        w.alive[k - 1][b] = 0;
    };

    // zero-fill cascades first, then smallest columns
    for (;;) {
        if (!w.rowq.empty()) {
            auto [k, r] = w.rowq.front();
            w.rowq.pop_front();
            if (!w.row_alive(k, r) || w.rownnz[k][r] != 1) continue;
            int found = -1;
            for (int c : w.rowlist[k][r]) {
                if (!w.col_alive(k, c)) continue;
                if (w.entry(k, c, r)) { found = c; break; }
            }
            if (found < 0) continue;
            const Int& v = *w.entry(k, found, r);
            if (v == 1 || v == -1) eliminate(k, found, r);
            continue;
        }
        if (!w.colq.empty()) {
            auto [k, j] = w.colq.front();
            w.colq.pop_front();
            if (!w.col_alive(k, j) || w.colnnz[k][j] != 1) continue;
            const auto& [r, v] = w.cols[k][j].front();
            if (v == 1 || v == -1) eliminate(k, j, r);
            continue;
        }
        if (w.pq.empty()) break;
        auto [nnz, k, j] = *w.pq.begin();
        w.pq.erase(w.pq.begin());
        if (!w.col_alive(k, j) || w.colnnz[k][j] != nnz || nnz == 0) continue;
        int best_row = -1, best_nnz = INT32_MAX;
        for (const auto& [r, v] : w.cols[k][j])
            if ((v == 1 || v == -1) && w.rownnz[k][r] < best_nnz) {
                best_nnz = w.rownnz[k][r];
                best_row = r;
            }
        if (best_row < 0) { w.skipped.insert({k, j}); continue; }
        eliminate(k, j, best_row);
    }

    // assemble the reduced complex
    old2new_.resize(top + 1);
    new2old_.resize(top + 1);
    std::vector<int> new_ranks(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        old2new_[k].assign(orig_ranks_[k], -1);
        for (int i = 0; i < orig_ranks_[k]; ++i)
            if (w.alive[k][i]) {
                old2new_[k][i] = int(new2old_[k].size());
                new2old_[k].push_back(i);
            }
        new_ranks[k] = int(new2old_[k].size());
    }
    std::vector<SparseMat> bnd(top + 1);
    for (int k = 1; k <= top; ++k) {
        SparseMat b(new_ranks[k - 1], new_ranks[k]);
        for (int j = 0; j < new_ranks[k]; ++j)
            for (const auto& [r, v] : w.cols[k][new2old_[k][j]])
                b.col[j].emplace_back(old2new_[k - 1][r], v);
        bnd[k] = std::move(b);
    }
    small_ = ChainComplex::from_boundaries(std::move(new_ranks), std::move(bnd), C.id());
}

int MorseReduction::new_index(int k, int old_idx) const
{
    if (k < 0 || k >= int(old2new_.size())) return -1;
    return old2new_[k][old_idx];
}

int MorseReduction::old_index(int k, int idx) const { return new2old_[k][idx]; }

std::vector<Int> MorseReduction::pull_cochain(int deg, const std::vector<Int>& small) const
{
    if (deg < 0 || deg >= int(orig_ranks_.size())) return {};
    if (int(small.size()) != int(new2old_[deg].size()))
        throw std::invalid_argument("pull_cochain: shape");
    std::vector<Int> out(orig_ranks_[deg], 0);
    for (size_t i = 0; i < new2old_[deg].size(); ++i) out[new2old_[deg][i]] = small[i];
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
        if (it->k == deg) out[it->a] = 0;
        if (it->k - 1 == deg) {
            Int acc = 0;
            for (const auto& [r, v] : it->beta) acc += v * out[r];
            out[it->b] = -it->u * acc; // u^{-1} = u for units
        }
    }
    return out;
}

std::vector<Int> MorseReduction::push_cochain(int deg, const std::vector<Int>& big) const
{
    if (deg < 0 || deg >= int(orig_ranks_.size()))
        return {};
    if (int(big.size()) != orig_ranks_[deg]) throw std::invalid_argument("push_cochain: shape");
    std::vector<Int> z = big;
    for (const auto& e : log_) {
        if (e.k != deg) continue;
        if (z[e.a] == 0) continue;
        for (const auto& [c, ac] : e.alpha) z[c] -= e.u * ac * z[e.a];
        z[e.a] = 0;
    }
    std::vector<Int> out(new2old_[deg].size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = z[new2old_[deg][i]];
    return out;
}

} // namespace concord
