#include "endowlab/point_set.hpp"

#include <algorithm>

namespace endowlab {

bool canonical_family_less(const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalSetLess{});
}

void sort_canonical(std::vector<PointSet>& family) {
    std::sort(family.begin(), family.end(), CanonicalSetLess{});
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

PointSet union_of(const std::vector<PointSet>& family) {
    PointSet out;
    for (PointSet s : family) out |= s;
    return out;
}

}  // namespace endowlab
