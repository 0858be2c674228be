#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "endowlab/limits.hpp"
#include "endowlab/poset.hpp"

namespace endowlab {

// Finite partial map from the index set to {0,1}. Bits refer to positions in
// the owning poset's sorted index set, not to the indices themselves.
struct CohenCondition {
    std::uint32_t domain = 0;
    std::uint32_t values = 0;  // subset of domain
    bool operator==(const CohenCondition&) const = default;
};

// Fn(D,2) ordered by reverse extension, compiled to a Poset whose index order
// is the canonical one: by support (size, then sorted indices), then values.
class CohenPoset {
public:
    CohenPoset(std::vector<unsigned> index_set, const Limits& limits = Limits::current());

    const Poset& poset() const { return poset_; }
    const std::vector<unsigned>& index_set() const { return index_set_; }

    const CohenCondition& condition(Cond p) const { return conditions_.at(index_of(p)); }
    Cond id(const CohenCondition& c) const;

    std::vector<unsigned> supp(Cond p) const;
    std::vector<unsigned> supp(const CohenCondition& c) const;
    std::size_t support_size(Cond p) const;
    // p and q agree on the intersection of their supports.
    bool agree(Cond p, Cond q) const;
    Cond restrict(Cond p, std::uint32_t domain_mask) const;
    std::uint32_t support_mask(Cond p) const { return condition(p).domain; }

    std::string literal(const CohenCondition& c) const;
    // "0:1,2:0"; the empty condition is "" (also accepted: "{}" and "∅").
    CohenCondition parse(std::string_view text) const;
    Cond parse_cond(std::string_view text) const { return id(parse(text)); }

private:
    std::vector<unsigned> index_set_;
    std::vector<CohenCondition> conditions_;
    std::vector<std::uint32_t> slot_;  // (domain, values) -> index, via encode()
    Poset poset_;

    std::size_t encode(const CohenCondition& c) const;
};

CohenPoset make_cohen(std::vector<unsigned> index_set, const Limits& limits = Limits::current());
// D = {0, ..., d-1}
CohenPoset make_cohen(std::size_t d, const Limits& limits = Limits::current());

// P_n = {p : |supp(p)| <= n}, stabilizing at |D|.
Stratification stratify_cohen(const CohenPoset& cohen);

}  // namespace endowlab
