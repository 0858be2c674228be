#include "endowlab/forcing.hpp"

#include <algorithm>

#include "endowlab/error.hpp"

namespace endowlab {

void SetName::normalize() {
    std::sort(pairs.begin(), pairs.end(), [](const NamePair& a, const NamePair& b) {
        if (a.condition != b.condition) return a.condition < b.condition;
        return canonical_less(a.set, b.set);
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<PointSet> evaluate_name(const Poset& poset, const SetName& name, Cond atom) {
    std::vector<PointSet> value;
    for (const auto& [q, set] : name.pairs)
        if (poset.leq(atom, q)) value.push_back(set);
    sort_canonical(value);
    return value;
}

namespace {

void check_name(const Poset& poset, const SetName& name) {
    for (const auto& pair : name.pairs) poset.check(pair.condition);
}

bool in_family(const std::vector<PointSet>& family, PointSet s) {
    return std::find(family.begin(), family.end(), s) != family.end();
}

struct AtomEvaluator {
    const Poset& poset;
    Cond atom;

    bool operator()(const stmt::MemberOfName& s) const {
        return in_family(evaluate_name(poset, s.name, atom), s.object);
    }
    bool operator()(const stmt::ExistsSupersetInCover& s) const {
        for (const auto& [q, set] : s.cover.pairs)
            if (s.ground.subset_of(set) && poset.leq(atom, q)) return true;
        return false;
    }
    bool operator()(const stmt::SubfamilyOf& s) const {
        for (PointSet w : evaluate_name(poset, s.name, atom))
            if (!in_family(s.family, w)) return false;
        return true;
    }
    bool operator()(const stmt::RefinesName& s) const {
        const auto cover = evaluate_name(poset, s.cover, atom);
        for (PointSet w : evaluate_name(poset, s.refined, atom)) {
            const bool dominated = std::any_of(cover.begin(), cover.end(), [&](PointSet u) { return w.subset_of(u); });
            if (!dominated) return false;
        }
        return true;
    }
    bool operator()(const stmt::FamilyUnionCovers& s) const {
        PointSet covered;
        for (const auto& name : s.names)
            for (PointSet w : evaluate_name(poset, name, atom)) covered |= w;
        return s.points.subset_of(covered);
    }
};

}  // namespace

void validate_statement(const Poset& poset, const Statement& s) {
    std::visit(
        [&](const auto& form) {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, stmt::MemberOfName> || std::is_same_v<T, stmt::SubfamilyOf>) {
                check_name(poset, form.name);
            } else if constexpr (std::is_same_v<T, stmt::ExistsSupersetInCover>) {
                check_name(poset, form.cover);
            } else if constexpr (std::is_same_v<T, stmt::RefinesName>) {
                check_name(poset, form.refined);
                check_name(poset, form.cover);
            } else {
                for (const auto& name : form.names) check_name(poset, name);
            }
        },
        s);
}

bool holds_at(const Poset& poset, Cond atom, const Statement& s) {
    if (!poset.is_atom(atom)) throw InputError("extensions are indexed by atoms; '" + poset.label(atom) + "' is not one");
    return std::visit(AtomEvaluator{poset, atom}, s);
}

bool forces(const Poset& poset, Cond p, const Statement& s) {
    poset.check(p);
    validate_statement(poset, s);
    for (Cond a : poset.atoms_below(p))
        if (!std::visit(AtomEvaluator{poset, a}, s)) return false;
    return true;
}

bool forced_everywhere(const Poset& poset, const Statement& s) {
    validate_statement(poset, s);
    for (Cond a : poset.atoms())
        if (!std::visit(AtomEvaluator{poset, a}, s)) return false;
    return true;
}

bool forces_dense(const Poset& poset, Cond p, const SetName& cover, PointSet ground) {
    poset.check(p);
    check_name(poset, cover);
    auto witness = [&](Cond s) {
        return std::any_of(cover.pairs.begin(), cover.pairs.end(),
                           [&](const NamePair& pr) { return ground.subset_of(pr.set) && poset.leq(s, pr.condition); });
    };
    for (Cond r : poset.down_set(p)) {
        const auto& below_r = poset.down_set(r);
        if (std::none_of(below_r.begin(), below_r.end(), witness)) return false;
    }
    return true;
}

}  // namespace endowlab
