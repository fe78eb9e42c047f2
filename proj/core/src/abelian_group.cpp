#include <concord/abelian_group.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace concord {

namespace {

// prime -> exponents, one entry per cyclic factor
std::map<Int, std::vector<int>> primary_decomposition(const std::vector<Int>& orders)
{
    std::map<Int, std::vector<int>> primary;
    for (Int n : orders) {
        if (n < 2) throw std::invalid_argument("torsion order < 2");
        for (Int p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            primary[p].push_back(e);
        }
        if (n > 1) primary[n].push_back(1);
    }
    return primary;
}

Int pow_int(const Int& p, int e)
{
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

std::vector<Int> invariant_factors_from_primary(std::map<Int, std::vector<int>>& primary)
{
    size_t k = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        k = std::max(k, exps.size());
    }
    // factor i (counting from the largest) = product of i-th largest prime powers
    std::vector<Int> inv(k, 1);
    for (auto& [p, exps] : primary)
        for (size_t i = 0; i < exps.size(); ++i)
            inv[i] *= pow_int(p, exps[i]);
    std::reverse(inv.begin(), inv.end()); // ascending: d_1 | d_2 | ...
    return inv;
}

} // namespace

AbelianGroup::AbelianGroup(int free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion))
{
    if (free_rank_ < 0) throw std::invalid_argument("negative free rank");
    for (size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw std::invalid_argument("invariant factor < 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("divisibility chain violated");
    }
}

AbelianGroup AbelianGroup::cyclic(const Int& n)
{
    if (n == 0) return free(1);
    if (n == 1) return trivial();
    return AbelianGroup(0, {n});
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Int>& orders)
{
    int rank = 0;
    std::vector<Int> finite;
    for (const Int& n : orders) {
        if (n == 0) { ++rank; continue; }
        if (n == 1) continue;
        finite.push_back(n);
    }
    auto primary = primary_decomposition(finite);
    return AbelianGroup(rank, invariant_factors_from_primary(primary));
}

Int AbelianGroup::torsion_order() const
{
    Int n = 1;
    for (const Int& d : torsion_) n *= d;
    return n;
}

Int AbelianGroup::generator_order(int i) const
{
    if (i < free_rank_) return 0;
    return torsion_[size_t(i) - free_rank_];
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& rhs) const
{
    std::vector<Int> orders;
    for (int i = 0; i < free_rank_ + rhs.free_rank_; ++i) orders.push_back(0);
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    orders.insert(orders.end(), rhs.torsion_.begin(), rhs.torsion_.end());
    return from_cyclic_orders(orders);
}

std::optional<AbelianGroup> AbelianGroup::cancel_cyclic(const Int& q) const
{
    if (q == 1) return *this;
    auto primary = primary_decomposition(torsion_);
    auto qp = primary_decomposition({q});
    if (qp.size() != 1) return std::nullopt; // only prime-power summands cancel cleanly
    const Int p = qp.begin()->first;
    const int e = qp.begin()->second.front();
    auto it = primary.find(p);
    if (it == primary.end()) return std::nullopt;
    auto pos = std::find(it->second.begin(), it->second.end(), e);
    if (pos == it->second.end()) return std::nullopt;
    it->second.erase(pos);
    if (it->second.empty()) primary.erase(it);
    return AbelianGroup(free_rank_, invariant_factors_from_primary(primary));
}

int AbelianGroup::rank_mod(const Int& p) const
{
    int r = free_rank_;
    for (const Int& d : torsion_)
        if (d % p == 0) ++r;
    return r;
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ == 1) { os << "Z"; first = false; }
    else if (free_rank_ > 1) { os << "Z^" << free_rank_; first = false; }
    for (const Int& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

Int element_order(const AbelianGroup& g, const std::vector<Int>& x)
{
    if (!g.is_finite()) throw std::invalid_argument("element_order: infinite group");
    if (int(x.size()) != g.generator_count()) throw std::invalid_argument("element_order: coordinate length");
    Int ord = 1;
    for (int i = 0; i < g.generator_count(); ++i) {
        const Int d = g.generator_order(i);
        const Int xi = mod_floor(x[i], d);
        ord = int_lcm(ord, d / int_gcd(d, xi));
    }
    return ord;
}

std::vector<std::vector<Int>> enumerate_elements(const AbelianGroup& g, std::uint64_t bound)
{
    if (!g.is_finite()) throw std::invalid_argument("enumerate_elements: infinite group");
    if (g.torsion_order() > bound) throw std::invalid_argument("enumerate_elements: group too large");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(g.generator_count(), 0);
    const int k = g.generator_count();
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        for (; i >= 0; --i) {
            cur[i] += 1;
            if (cur[i] < g.generator_order(i)) break;
            cur[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace concord
