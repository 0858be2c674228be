#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endowlab/point_set.hpp"

namespace endowlab {

// Finite topological space given by a base. The topology is the closure of
// the base under finite intersections and unions (with ∅ and X added).
class FiniteSpace {
public:
    FiniteSpace(std::vector<std::string> points, std::vector<PointSet> base);

    std::size_t size() const { return points_.size(); }
    PointSet whole() const { return PointSet::full(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const std::vector<PointSet>& base() const { return base_; }
    // Canonical order.
    const std::vector<PointSet>& topology() const { return topology_; }

    bool in_base(PointSet s) const;
    bool is_open(PointSet s) const;
    bool is_open_cover(const std::vector<PointSet>& family) const;

    std::size_t point(std::string_view label) const;  // throws InputError
    PointSet set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(PointSet s) const;
    std::string format(PointSet s) const;  // "{x,y}"

private:
    std::vector<std::string> points_;
    std::vector<PointSet> base_;
    std::vector<PointSet> topology_;
};

struct Refinement {
    bool holds = false;
    // Each member of A mapped to the canonically least superset in B.
    std::vector<std::pair<PointSet, PointSet>> witness;
    std::optional<PointSet> counterexample;
};

// A refines B. Both families must consist of open sets (InputError otherwise);
// neither needs to be a cover.
Refinement refines(const FiniteSpace& space, const std::vector<PointSet>& a, const std::vector<PointSet>& b);

}  // namespace endowlab
