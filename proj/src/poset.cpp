#include "endowlab/poset.hpp"

#include <algorithm>
#include <bit>

#include "endowlab/error.hpp"

namespace endowlab {

namespace {

std::vector<Poset::Bits> empty_rows(std::size_t n) {
    return std::vector<Poset::Bits>(n, Poset::Bits(n));
}

}  // namespace

Poset Poset::from_relation(std::vector<std::string> labels,
                           std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    const std::size_t n = labels.size();
    if (n == 0) throw InputError("poset must have at least one element");
    // up[a][b] iff a <= b; closure by Warshall over rows.
    auto up = empty_rows(n);
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw InputError("order pair refers to unknown element");
        up[a].set(b);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i][k]) up[i] |= up[k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (up[i][j] && up[j][i])
                throw InputError("order is not antisymmetric: '" + labels[i] + "' and '" + labels[j] +
                                 "' lie below each other");
    auto down = empty_rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = up[i].find_first(); j != Bits::npos; j = up[i].find_next(j)) down[j].set(i);
    return Poset(std::move(labels), std::move(down));
}

Poset Poset::from_order(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq) {
    const std::size_t n = labels.size();
    if (n == 0) throw InputError("poset must have at least one element");
    auto down = empty_rows(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r)
            if (leq(r, p)) down[p].set(r);
    for (std::size_t p = 0; p < n; ++p) {
        if (!down[p][p]) throw InputError("order is not reflexive at '" + labels[p] + "'");
        for (std::size_t q = p + 1; q < n; ++q)
            if (down[p][q] && down[q][p]) throw InputError("order is not antisymmetric at '" + labels[p] + "'");
        // r <= p and s <= r imply s <= p
        for (std::size_t r = down[p].find_first(); r != Bits::npos; r = down[p].find_next(r))
            if (!down[r].is_subset_of(down[p])) throw InputError("order is not transitive at '" + labels[p] + "'");
    }
    return Poset(std::move(labels), std::move(down));
}

Poset::Poset(std::vector<std::string> labels, std::vector<Bits> down)
    : labels_(std::move(labels)), down_(std::move(down)) {
    const std::size_t n = labels_.size();
    {
        std::vector<std::string_view> sorted(labels_.begin(), labels_.end());
        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
            throw InputError("duplicate condition label '" + std::string(*dup) + "'");
    }
    atom_flag_.assign(n, false);
    for (std::size_t p = 0; p < n; ++p) {
        if (down_[p].count() == 1) {
            atom_flag_[p] = true;
            atoms_.push_back(cond_at(p));
        }
    }
    down_list_.resize(n);
    atoms_below_.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t r = down_[p].find_first(); r != Bits::npos; r = down_[p].find_next(r)) {
            down_list_[p].push_back(cond_at(r));
            if (atom_flag_[r]) atoms_below_[p].push_back(cond_at(r));
        }
        if (down_[p].count() == n) top_ = cond_at(p);
    }
    compat_ = empty_rows(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q)
            if (down_[p].intersects(down_[q])) {
                compat_[p].set(q);
                compat_[q].set(p);
            }
}

CondSet Poset::all() const {
    CondSet out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = cond_at(i);
    return out;
}

void Poset::check(Cond p) const {
    if (index_of(p) >= size()) throw InputError("unknown condition id " + std::to_string(index_of(p)));
}

bool Poset::leq(Cond p, Cond q) const {
    check(p);
    check(q);
    return down_[index_of(q)][index_of(p)];
}

bool Poset::compatible(Cond p, Cond q) const {
    check(p);
    check(q);
    return compat_[index_of(p)][index_of(q)];
}

const std::string& Poset::label(Cond p) const {
    check(p);
    return labels_[index_of(p)];
}

Cond Poset::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return cond_at(i);
    throw InputError("unknown condition '" + std::string(label) + "'");
}

bool Poset::is_antichain(std::span<const Cond> members) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j] || compatible(members[i], members[j])) return false;
    return true;
}

bool Poset::is_maximal_antichain(std::span<const Cond> members) const {
    if (!is_antichain(members)) return false;
    for (std::size_t p = 0; p < size(); ++p) {
        const bool met = std::any_of(members.begin(), members.end(),
                                     [&](Cond q) { return compat_[p][index_of(q)]; });
        if (!met) return false;
    }
    return true;
}

bool Poset::has_lower_bound(std::span<const Cond> members) const {
    Bits common(size());
    common.set();
    for (Cond q : members) {
        check(q);
        common &= down_[index_of(q)];
    }
    return common.any();
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q || !down_[q][p]) continue;
            // p < q with nothing strictly between
            bool between = false;
            for (std::size_t r = down_[q].find_first(); r != Bits::npos && !between; r = down_[q].find_next(r))
                between = r != p && r != q && down_[r][p];
            if (!between) out.emplace_back(p, q);
        }
    }
    return out;
}

// --- Stratification -------------------------------------------------------

Stratification::Stratification(const Poset& poset, std::vector<CondSet> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw InputError("stratification needs at least one level");
    const std::size_t n = poset.size();
    rank_.assign(n, levels_.size());
    for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
        auto& level = levels_[lv];
        for (Cond p : level) poset.check(p);
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (Cond p : level)
            if (rank_[index_of(p)] == levels_.size()) rank_[index_of(p)] = lv;
        if (lv > 0 && !std::includes(level.begin(), level.end(), levels_[lv - 1].begin(), levels_[lv - 1].end()))
            throw InputError("stratification levels must be increasing");
    }
    if (levels_.back().size() != n) throw InputError("last stratification level must be the whole poset");
    // trim repeated final levels so the last index is the least stabilizing one
    while (levels_.size() > 1 && levels_[levels_.size() - 2].size() == n) levels_.pop_back();
}

Stratification Stratification::from_rank(const Poset& poset, const std::vector<std::size_t>& rank) {
    if (rank.size() != poset.size()) throw InputError("rank vector size mismatch");
    const std::size_t top = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
    std::vector<CondSet> levels(top + 1);
    for (std::size_t lv = 0; lv <= top; ++lv)
        for (std::size_t i = 0; i < rank.size(); ++i)
            if (rank[i] <= lv) levels[lv].push_back(cond_at(i));
    return Stratification(poset, std::move(levels));
}

Stratification Stratification::trivial(const Poset& poset) {
    return Stratification(poset, {poset.all()});
}

Stratification Stratification::by_depth(const Poset& poset) {
    std::vector<std::size_t> depth(poset.size(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t q = 0; q < poset.size(); ++q)
            for (Cond p : poset.down_set(cond_at(q)))
                if (index_of(p) != q && depth[index_of(p)] < depth[q] + 1) {
                    depth[index_of(p)] = depth[q] + 1;
                    changed = true;
                }
    }
    return from_rank(poset, depth);
}

const CondSet& Stratification::level(std::size_t n) const {
    return levels_[std::min(n, levels_.size() - 1)];
}

bool Stratification::contains(std::size_t n, Cond p) const {
    return rank_.at(index_of(p)) <= n;
}

// --- Antichain enumeration ------------------------------------------------

namespace {

// Bron-Kerbosch with pivoting on the incompatibility graph: its maximal
// cliques are exactly the maximal antichains.
void bron_kerbosch(const std::vector<std::uint64_t>& incompat, std::uint64_t chosen, std::uint64_t candidates,
                   std::uint64_t excluded, std::vector<std::uint64_t>& out) {
    if (candidates == 0 && excluded == 0) {
        out.push_back(chosen);
        return;
    }
    const std::uint64_t pool = candidates | excluded;
    int pivot = std::countr_zero(pool);
    int best = -1;
    for (std::uint64_t b = pool; b != 0; b &= b - 1) {
        const int u = std::countr_zero(b);
        const int deg = std::popcount(candidates & incompat[u]);
        if (deg > best) {
            best = deg;
            pivot = u;
        }
    }
    for (std::uint64_t b = candidates & ~incompat[pivot]; b != 0; b &= b - 1) {
        const int v = std::countr_zero(b);
        const std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(incompat, chosen | bit, candidates & incompat[v], excluded & incompat[v], out);
        candidates &= ~bit;
        excluded |= bit;
    }
}

}  // namespace

std::vector<CondSet> all_maximal_antichains(const Poset& poset) {
    const std::size_t n = poset.size();
    if (n > 64) throw ResourceError("exhaustive antichain enumeration supports at most 64 elements");
    std::vector<std::uint64_t> incompat(n, 0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (!poset.compatible(cond_at(p), cond_at(q))) incompat[p] |= std::uint64_t{1} << q;
    std::vector<std::uint64_t> masks;
    const std::uint64_t everything = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bron_kerbosch(incompat, 0, everything, 0, masks);
    std::vector<CondSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
        CondSet a;
        for (std::uint64_t b = m; b != 0; b &= b - 1) a.push_back(cond_at(static_cast<std::size_t>(std::countr_zero(b))));
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CondSet complete_antichain(const Poset& poset, CondSet members, std::span<const Cond> order) {
    for (Cond p : order) {
        const bool clash = std::any_of(members.begin(), members.end(),
                                       [&](Cond q) { return poset.compatible(p, q); });
        if (!clash) members.push_back(p);
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace endowlab
