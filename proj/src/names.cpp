#include "endowlab/names.hpp"

#include <algorithm>

#include "endowlab/error.hpp"

namespace endowlab {

namespace {

// D_x: conditions below some pair whose set contains x.
bool in_witness_set(const Poset& poset, const CoverName& name, std::size_t x, Cond s) {
    return std::any_of(name.pairs.begin(), name.pairs.end(), [&](const NamePair& pr) {
        return pr.set.contains(x) && poset.leq(s, pr.condition);
    });
}

}  // namespace

bool validate_cover_name(const Poset& poset, const FiniteSpace& space, const CoverName& name, std::string* reason) {
    auto fail = [&](std::string why) {
        if (reason) *reason = std::move(why);
        return false;
    };
    for (const auto& pr : name.pairs) {
        poset.check(pr.condition);
        if (!space.in_base(pr.set)) return fail("value " + space.format(pr.set) + " is not a base set");
    }
    for (std::size_t x = 0; x < space.size(); ++x) {
        for (Cond r : poset.all()) {
            const auto& below = poset.down_set(r);
            const bool reaches = std::any_of(below.begin(), below.end(),
                                             [&](Cond s) { return in_witness_set(poset, name, x, s); });
            if (!reaches)
                return fail("point '" + space.points()[x] + "' is not densely covered: nothing below '" +
                            poset.label(r) + "' decides it");
        }
    }
    return true;
}

std::vector<PointName> derive_point_names(const Poset& poset, const FiniteSpace& space, const CoverName& name) {
    std::string reason;
    if (!validate_cover_name(poset, space, name, &reason)) throw PreconditionError("invalid cover name: " + reason);
    std::vector<PointName> out;
    for (std::size_t x = 0; x < space.size(); ++x) {
        PointName pn;
        pn.point = x;
        for (Cond p : poset.all()) {
            if (!in_witness_set(poset, name, x, p)) continue;
            const bool clash = std::any_of(pn.antichain.begin(), pn.antichain.end(),
                                           [&](Cond q) { return poset.compatible(p, q); });
            if (!clash) pn.antichain.push_back(p);
        }
        if (!poset.is_maximal_antichain(pn.antichain))
            throw PreconditionError("witness antichain for '" + space.points()[x] + "' is not maximal");
        for (Cond p : pn.antichain) {
            std::size_t best = name.pairs.size();
            for (std::size_t i = 0; i < name.pairs.size(); ++i) {
                const auto& pr = name.pairs[i];
                if (!pr.set.contains(x) || !poset.leq(p, pr.condition)) continue;
                if (best == name.pairs.size()) {
                    best = i;
                    continue;
                }
                const auto& cur = name.pairs[best];
                if (canonical_less(pr.set, cur.set) || (pr.set == cur.set && pr.condition < cur.condition)) best = i;
            }
            pn.values.push_back(name.pairs[best].set);
            pn.source.push_back(best);
        }
        out.push_back(std::move(pn));
    }
    return out;
}

Approximation approximate(const Poset& poset, const FiniteSpace& space, const std::vector<PointName>& point_names,
                          std::size_t n, const EndowmentFamily& family) {
    Approximation approx;
    approx.level = n;
    for (const auto& pn : point_names) {
        PointApproximation pa;
        pa.point = pn.point;
        pa.endowment = family.construct(n, pn.antichain);
        if (!family.accepts(n, pa.endowment))
            throw PreconditionError("endowment constructor output for '" + space.points()[pn.point] +
                                    "' is rejected by its own level predicate");
        pa.value = space.whole();
        for (Cond q : pa.endowment) {
            const auto it = std::find(pn.antichain.begin(), pn.antichain.end(), q);
            if (it == pn.antichain.end())
                throw PreconditionError("endowment member '" + poset.label(q) + "' is outside A_x");
            pa.value &= pn.values[static_cast<std::size_t>(it - pn.antichain.begin())];
        }
        approx.cover.push_back(pa.value);
        approx.elements.push_back(std::move(pa));
    }
    sort_canonical(approx.cover);
    return approx;
}

ApproxCertificate check_lemma_approx(const Poset& poset, const Stratification& strat, const Approximation& approx,
                                     const CoverName& name) {
    ApproxCertificate cert;
    cert.level = approx.level;
    for (PointSet v : approx.cover) {
        const Statement goal = stmt::ExistsSupersetInCover{name, v};
        for (Cond p : strat.level(approx.level)) {
            const auto& below = poset.down_set(p);
            const auto r = std::find_if(below.begin(), below.end(), [&](Cond c) { return forces(poset, c, goal); });
            if (r == below.end()) {
                cert.counterexample = std::make_pair(v, p);
                return cert;
            }
            cert.triples.push_back({v, p, *r});
        }
    }
    cert.positive = true;
    return cert;
}

std::pair<RefinedName, RefineCertificate> refine_name(const Poset& poset, const FiniteSpace& space,
                                                     const Stratification& strat, const Approximation& approx,
                                                     const std::vector<PointSet>& family, const CoverName& name) {
    const Refinement pre = refines(space, family, approx.cover);
    if (!pre.holds)
        throw PreconditionError("family member " + space.format(*pre.counterexample) +
                                " refines no set of the level-" + std::to_string(approx.level) + " approximation");
    RefinedName refined;
    refined.family = family;
    sort_canonical(refined.family);
    for (Cond p : poset.all())
        for (PointSet h : refined.family)
            if (forces(poset, p, stmt::ExistsSupersetInCover{name, h})) refined.name.pairs.push_back({p, h});
    refined.name.normalize();

    RefineCertificate cert;
    cert.level = approx.level;
    cert.refines_forced = forced_everywhere(poset, stmt::RefinesName{refined.name, name});
    bool clause2 = true;
    for (Cond p : strat.level(approx.level)) {
        for (PointSet h : refined.family) {
            const Statement goal = stmt::MemberOfName{refined.name, h};
            const auto& below = poset.down_set(p);
            const auto r = std::find_if(below.begin(), below.end(), [&](Cond c) { return forces(poset, c, goal); });
            if (r == below.end()) {
                if (!cert.counterexample) cert.counterexample = std::make_pair(p, h);
                clause2 = false;
                continue;
            }
            cert.triples.push_back({p, h, *r});
        }
    }
    cert.positive = cert.refines_forced && clause2;
    return {std::move(refined), std::move(cert)};
}

std::pair<std::vector<RefinedName>, PipelineCertificate> endow_refine_pipeline(
    const Poset& poset, const FiniteSpace& space, const Stratification& strat, const std::vector<CoverName>& names,
    const std::vector<std::vector<PointSet>>& families, const std::vector<Approximation>& approximations) {
    const std::size_t levels = names.size();
    if (families.size() != levels || approximations.size() != levels)
        throw InputError("pipeline needs one family and one approximation per name");
    for (std::size_t n = 0; n < levels; ++n)
        if (approximations[n].level != n) throw InputError("approximation list must be indexed by level");

    const std::size_t floor = strat.stabilization_index();
    for (std::size_t x = 0; x < space.size(); ++x) {
        bool hit = false;
        for (std::size_t n = floor; n < levels && !hit; ++n)
            hit = std::any_of(families[n].begin(), families[n].end(), [&](PointSet h) { return h.contains(x); });
        if (!hit)
            throw PreconditionError("point '" + space.points()[x] + "' lies in no family member at a level >= " +
                                    std::to_string(floor) + " (horizon " + std::to_string(levels) + ")");
    }

    std::vector<RefinedName> refined;
    PipelineCertificate cert;
    cert.positive = true;
    for (std::size_t n = 0; n < levels; ++n) {
        auto [w, level_cert] = refine_name(poset, space, strat, approximations[n], families[n], names[n]);
        cert.subfamily.push_back(forced_everywhere(poset, stmt::SubfamilyOf{w.name, w.family}));
        cert.refines.push_back(forced_everywhere(poset, stmt::RefinesName{w.name, names[n]}));
        cert.positive = cert.positive && level_cert.positive && cert.subfamily.back() && cert.refines.back();
        cert.levels.push_back(std::move(level_cert));
        refined.push_back(std::move(w));
    }
    std::vector<SetName> all;
    for (const auto& w : refined) all.push_back(w.name);
    cert.covers = forced_everywhere(poset, stmt::FamilyUnionCovers{all, space.whole()});
    cert.positive = cert.positive && cert.covers;
    return {std::move(refined), std::move(cert)};
}

}  // namespace endowlab
