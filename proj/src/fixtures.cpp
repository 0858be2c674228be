#include "endowlab/fixtures.hpp"

namespace endowlab::fixtures {

FiniteSpace two_point_space() {
    return FiniteSpace({"x", "y"}, {PointSet(0b01), PointSet(0b11)});
}

CoverName i1_name(const ForcingNotion& cohen, const FiniteSpace& space) {
    const PointSet x = space.set_of({"x"});
    const PointSet xy = space.set_of({"x", "y"});
    CoverName name;
    name.pairs = {{cohen.cohen->parse_cond("0:0"), x}, {cohen.cohen->parse_cond("0:0"), xy},
                  {cohen.cohen->parse_cond("0:1"), xy}};
    name.normalize();
    return name;
}

Scenario i1_scenario(Property property, std::size_t copies) {
    ForcingNotion notion = make_forcing_notion(PosetSpec::cohen(2));
    FiniteSpace space = two_point_space();
    const CoverName name = i1_name(notion, space);
    return Scenario{std::move(notion), "default", std::move(space), std::vector<CoverName>(copies, name), property};
}

Scenario measure_analog_scenario(Property property, std::size_t copies) {
    ForcingNotion notion = make_forcing_notion(PosetSpec::measure(1));
    FiniteSpace space = two_point_space();
    const PointSet x = space.set_of({"x"});
    const PointSet xy = space.set_of({"x", "y"});
    const auto& algebra = *notion.measure;
    CoverName name;
    name.pairs = {{algebra.parse_cond("0"), x}, {algebra.parse_cond("0"), xy}, {algebra.parse_cond("1"), xy}};
    name.normalize();
    return Scenario{std::move(notion), "default", std::move(space), std::vector<CoverName>(copies, name), property};
}

Scenario no_headroom_scenario() {
    ForcingNotion notion = make_forcing_notion(PosetSpec::cohen(2));
    FiniteSpace space({"x", "y"}, {PointSet(0b01), PointSet(0b10)});
    const Cond top = *notion.poset->top();
    CoverName name;
    name.pairs = {{top, PointSet(0b01)}, {top, PointSet(0b10)}};
    const std::size_t copies = notion.strat.stabilization_index();
    return Scenario{std::move(notion), "default", std::move(space), std::vector<CoverName>(copies, name),
                    Property::rothberger};
}

Scenario tamper_scenario() {
    ForcingNotion notion = make_forcing_notion(PosetSpec::cohen(2));
    FiniteSpace space({"x", "y", "z"}, {PointSet(0b011), PointSet(0b100)});
    const Cond top = *notion.poset->top();
    CoverName name;
    name.pairs = {{top, PointSet(0b011)}, {top, PointSet(0b100)}};
    name.normalize();
    return Scenario{std::move(notion), "default", std::move(space), {name}, Property::rothberger};
}

}  // namespace endowlab::fixtures
