#pragma once

#include <variant>
#include <vector>

#include "endowlab/point_set.hpp"
#include "endowlab/poset.hpp"

namespace endowlab {

struct NamePair {
    Cond condition;
    PointSet set;
    bool operator==(const NamePair&) const = default;
};

// A name for a family of ground sets: the value in the extension of an atom a
// is {U : (q, U) in pairs, a <= q}.
struct SetName {
    std::vector<NamePair> pairs;

    // Canonical pair order: by condition, then by set.
    void normalize();
    bool operator==(const SetName&) const = default;
};

// Values U with some (q, U) in the name and atom <= q, canonical order. Defined
// for any condition; at an atom this is the value in that extension.
std::vector<PointSet> evaluate_name(const Poset& poset, const SetName& name, Cond atom);

// The closed statement grammar. Each form is evaluated per atom.
namespace stmt {

struct MemberOfName {
    SetName name;
    PointSet object;
};
struct ExistsSupersetInCover {
    SetName cover;
    PointSet ground;
};
struct SubfamilyOf {
    SetName name;
    std::vector<PointSet> family;
};
struct RefinesName {
    SetName refined;
    SetName cover;
};
struct FamilyUnionCovers {
    std::vector<SetName> names;
    PointSet points;
};

}  // namespace stmt

using Statement = std::variant<stmt::MemberOfName, stmt::ExistsSupersetInCover, stmt::SubfamilyOf,
                               stmt::RefinesName, stmt::FamilyUnionCovers>;

// Throws InputError if a name mentions a condition outside the poset.
void validate_statement(const Poset& poset, const Statement& s);

// Truth of `s` in the extension determined by `atom`.
bool holds_at(const Poset& poset, Cond atom, const Statement& s);

// p forces s iff s holds at every atom below p.
bool forces(const Poset& poset, Cond p, const Statement& s);

// Every condition forces s: s holds at every atom of the poset.
bool forced_everywhere(const Poset& poset, const Statement& s);

// Independent oracle for ExistsSupersetInCover: the set
// {s : exists (q,U) in cover with s <= q and ground ⊆ U} is dense below p.
// Uses only the order, never atoms.
bool forces_dense(const Poset& poset, Cond p, const SetName& cover, PointSet ground);

}  // namespace endowlab
