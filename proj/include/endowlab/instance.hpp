#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endowlab/cohen.hpp"
#include "endowlab/endowment.hpp"
#include "endowlab/measure.hpp"
#include "endowlab/names.hpp"
#include "endowlab/selection.hpp"
#include "endowlab/space.hpp"

namespace endowlab {

struct PosetSpec {
    enum class Kind { cohen, measure, explicit_order };
    Kind kind = Kind::cohen;
    std::vector<unsigned> index_set;  // cohen
    unsigned dimension = 0;           // measure
    // explicit
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> leq;
    std::optional<std::vector<std::vector<std::string>>> levels;

    static PosetSpec cohen(std::size_t d);
    static PosetSpec measure(unsigned k);
};

// "cohen:D=3" or "measure:k=2"; throws UsageError on anything else.
PosetSpec parse_poset_spec(std::string_view text);

// A compiled forcing notion with its stratification.
struct ForcingNotion {
    PosetSpec spec;
    std::shared_ptr<const Poset> poset;
    std::shared_ptr<const CohenPoset> cohen;      // set for Cohen posets
    std::shared_ptr<const MeasurePoset> measure;  // set for measure algebras
    Stratification strat;

    // "default" picks dow / measure / compatibility by poset kind; also
    // "dow", "measure", "compatibility", "adversarial".
    EndowmentFamily family(std::string_view which = "default") const;
    std::string describe() const;
};

ForcingNotion make_forcing_notion(const PosetSpec& spec, const Limits& limits = Limits::current());

struct Scenario {
    ForcingNotion notion;
    std::string family = "default";
    FiniteSpace space;
    std::vector<CoverName> names;  // names[n] = U_n
    Property property = Property::rothberger;
};

}  // namespace endowlab
