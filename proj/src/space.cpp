#include "endowlab/space.hpp"

#include <algorithm>
#include <set>

#include "endowlab/error.hpp"

namespace endowlab {

namespace {

std::vector<PointSet> close_topology(const std::vector<PointSet>& base, PointSet whole, std::size_t cap) {
    std::set<std::uint64_t> seen{0, whole.bits()};
    for (PointSet b : base) seen.insert(b.bits());
    // Intersections first, then unions: the unions of finite intersections of
    // base sets are closed under both operations.
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<std::uint64_t> snapshot(seen.begin(), seen.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                grew |= seen.insert(snapshot[i] & snapshot[j]).second;
        if (seen.size() > cap) throw ResourceError("topology closure exceeds " + std::to_string(cap) + " open sets");
    }
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<std::uint64_t> snapshot(seen.begin(), seen.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                grew |= seen.insert(snapshot[i] | snapshot[j]).second;
        if (seen.size() > cap) throw ResourceError("topology closure exceeds " + std::to_string(cap) + " open sets");
    }
    std::vector<PointSet> out;
    for (std::uint64_t bits : seen) out.emplace_back(bits);
    sort_canonical(out);
    return out;
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<PointSet> base)
    : points_(std::move(points)), base_(std::move(base)) {
    if (points_.size() > PointSet::max_points) throw ResourceError("spaces are limited to 64 points");
    std::set<std::string> unique(points_.begin(), points_.end());
    if (unique.size() != points_.size()) throw InputError("duplicate point label");
    const PointSet all = whole();
    for (PointSet b : base_)
        if (!b.subset_of(all)) throw InputError("base set mentions an unknown point");
    sort_canonical(base_);
    if (!(union_of(base_) == all)) throw InputError("base does not cover the space");
    topology_ = close_topology(base_, all, 1U << 16);
}

bool FiniteSpace::in_base(PointSet s) const { return std::binary_search(base_.begin(), base_.end(), s, CanonicalSetLess{}); }

bool FiniteSpace::is_open(PointSet s) const {
    return std::binary_search(topology_.begin(), topology_.end(), s, CanonicalSetLess{});
}

bool FiniteSpace::is_open_cover(const std::vector<PointSet>& family) const {
    return std::all_of(family.begin(), family.end(), [&](PointSet s) { return is_open(s); }) &&
           union_of(family) == whole();
}

std::size_t FiniteSpace::point(std::string_view label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == label) return i;
    throw InputError("unknown point '" + std::string(label) + "'");
}

PointSet FiniteSpace::set_of(const std::vector<std::string>& labels) const {
    PointSet s;
    for (const auto& l : labels) s |= PointSet::single(point(l));
    return s;
}

std::vector<std::string> FiniteSpace::labels_of(PointSet s) const {
    std::vector<std::string> out;
    for (std::size_t i : s.indices()) {
        if (i >= points_.size()) throw InputError("set mentions a point outside the space");
        out.push_back(points_[i]);
    }
    return out;
}

std::string FiniteSpace::format(PointSet s) const {
    std::string out = "{";
    bool first = true;
    for (const auto& l : labels_of(s)) {
        out += (first ? "" : ",") + l;
        first = false;
    }
    return out + "}";
}

Refinement refines(const FiniteSpace& space, const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
    for (PointSet s : a)
        if (!space.is_open(s)) throw InputError("refines: " + space.format(s) + " is not open");
    for (PointSet s : b)
        if (!space.is_open(s)) throw InputError("refines: " + space.format(s) + " is not open");
    std::vector<PointSet> targets = b;
    sort_canonical(targets);
    std::vector<PointSet> members = a;
    sort_canonical(members);
    Refinement out;
    for (PointSet u : members) {
        const auto it = std::find_if(targets.begin(), targets.end(), [&](PointSet v) { return u.subset_of(v); });
        if (it == targets.end()) {
            out.witness.clear();
            out.counterexample = u;
            return out;
        }
        out.witness.emplace_back(u, *it);
    }
    out.holds = true;
    return out;
}

}  // namespace endowlab
