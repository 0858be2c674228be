#include "endowlab/instance.hpp"

#include <charconv>

#include "endowlab/error.hpp"

namespace endowlab {

PosetSpec PosetSpec::cohen(std::size_t d) {
    PosetSpec spec;
    spec.kind = Kind::cohen;
    for (std::size_t i = 0; i < d; ++i) spec.index_set.push_back(static_cast<unsigned>(i));
    return spec;
}

PosetSpec PosetSpec::measure(unsigned k) {
    PosetSpec spec;
    spec.kind = Kind::measure;
    spec.dimension = k;
    return spec;
}

PosetSpec parse_poset_spec(std::string_view text) {
    auto number_after = [&](std::string_view prefix) -> unsigned {
        const std::string_view digits = text.substr(prefix.size());
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
            throw UsageError("malformed poset spec '" + std::string(text) + "'");
        return value;
    };
    if (text.starts_with("cohen:D=")) return PosetSpec::cohen(number_after("cohen:D="));
    if (text.starts_with("measure:k=")) return PosetSpec::measure(number_after("measure:k="));
    throw UsageError("malformed poset spec '" + std::string(text) + "' (expected cohen:D=<n> or measure:k=<n>)");
}

ForcingNotion make_forcing_notion(const PosetSpec& spec, const Limits& limits) {
    ForcingNotion notion;
    notion.spec = spec;
    switch (spec.kind) {
        case PosetSpec::Kind::cohen: {
            auto cohen = std::make_shared<const CohenPoset>(spec.index_set, limits);
            notion.cohen = cohen;
            notion.poset = std::shared_ptr<const Poset>(cohen, &cohen->poset());
            notion.strat = stratify_cohen(*cohen);
            break;
        }
        case PosetSpec::Kind::measure: {
            auto algebra = std::make_shared<const MeasurePoset>(spec.dimension, limits);
            notion.measure = algebra;
            notion.poset = std::shared_ptr<const Poset>(algebra, &algebra->poset());
            notion.strat = stratify_measure(*algebra);
            break;
        }
        case PosetSpec::Kind::explicit_order: {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            auto index = [&](const std::string& label) {
                for (std::size_t i = 0; i < spec.elements.size(); ++i)
                    if (spec.elements[i] == label) return i;
                throw InputError("order pair mentions unknown element '" + label + "'");
            };
            for (const auto& [a, b] : spec.leq) pairs.emplace_back(index(a), index(b));
            auto poset = std::make_shared<const Poset>(Poset::from_relation(spec.elements, pairs));
            notion.poset = poset;
            if (spec.levels) {
                std::vector<CondSet> levels;
                for (const auto& level : *spec.levels) {
                    CondSet ids;
                    for (const auto& label : level) ids.push_back(poset->find(label));
                    levels.push_back(std::move(ids));
                }
                notion.strat = Stratification(*poset, std::move(levels));
            } else {
                notion.strat = Stratification::by_depth(*poset);
            }
            break;
        }
    }
    return notion;
}

EndowmentFamily ForcingNotion::family(std::string_view which) const {
    if (which == "default") {
        if (cohen) return dow_family(cohen);
        if (measure) return measure_family(measure);
        return compatibility_family(poset, strat);
    }
    if (which == "dow") {
        if (!cohen) throw InputError("the dow family needs a Cohen poset");
        return dow_family(cohen);
    }
    if (which == "measure") {
        if (!measure) throw InputError("the measure family needs a measure algebra");
        return measure_family(measure);
    }
    if (which == "compatibility") return compatibility_family(poset, strat);
    if (which == "adversarial") return adversarial_family(poset);
    throw UsageError("unknown endowment family '" + std::string(which) + "'");
}

std::string ForcingNotion::describe() const {
    switch (spec.kind) {
        case PosetSpec::Kind::cohen: return "cohen:D=" + std::to_string(spec.index_set.size());
        case PosetSpec::Kind::measure: return "measure:k=" + std::to_string(spec.dimension);
        case PosetSpec::Kind::explicit_order: return "explicit:" + std::to_string(spec.elements.size());
    }
    return "?";
}

}  // namespace endowlab
