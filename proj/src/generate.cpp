#include "endowlab/generate.hpp"

#include <algorithm>

#include "endowlab/error.hpp"

namespace endowlab {

GenBounds GenBounds::parse(std::string_view text) {
    if (text.empty() || text == "default") return GenBounds{};
    if (text == "small") return GenBounds{3, 6, 15, 6};
    if (text == "large") return GenBounds{10, 24, 243, 16};
    // Same key=value syntax as the resource limits, restricted to the generator keys.
    for (std::size_t pos = 0; pos < text.size();) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string_view key = text.substr(pos, std::min(text.find('=', pos), end) - pos);
        if (!key.empty() && key != "points" && key != "base" && key != "poset" && key != "levels")
            throw UsageError("unknown generator bound '" + std::string(key) +
                             "' (expected default, small, large or points/base/poset/levels=<n>)");
        pos = end + 1;
    }
    const Limits parsed = Limits::parse(text, Limits{});
    return GenBounds{parsed.points, parsed.base, parsed.poset, parsed.levels};
}

void GenBounds::check(const Limits& limits) const {
    auto over = [](const char* what, std::size_t asked, std::size_t cap) {
        if (asked > cap)
            throw ResourceError(std::string("generator bound ") + what + "=" + std::to_string(asked) +
                                " exceeds the limit " + std::to_string(cap));
    };
    over("points", points, limits.points);
    over("base", base, limits.base);
    over("poset", poset, limits.poset);
    over("levels", levels, limits.levels);
    if (points == 0 || base == 0 || levels == 0 || poset < 3) throw UsageError("generator bounds are too small");
}

CondSet random_maximal_antichain(const Poset& poset, Rng& rng) {
    CondSet order = poset.all();
    rng.shuffle(std::span<Cond>(order));
    return complete_antichain(poset, {}, order);
}

std::vector<CondSet> random_maximal_antichains(const Poset& poset, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CondSet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_maximal_antichain(poset, rng));
    return out;
}

PosetSpec random_explicit_poset(Rng& rng, std::size_t size, std::uint64_t num, std::uint64_t den) {
    PosetSpec spec;
    spec.kind = PosetSpec::Kind::explicit_order;
    for (std::size_t i = 0; i < size; ++i) spec.elements.push_back("e" + std::to_string(i));
    // Edges go from later to earlier elements, so the relation is acyclic.
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (rng.chance(num, den)) spec.leq.emplace_back(spec.elements[j], spec.elements[i]);
    return spec;
}

FiniteSpace random_space(Rng& rng, std::size_t points, std::size_t base_sets) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
    const PointSet whole = PointSet::full(points);
    std::vector<PointSet> base;
    const std::size_t count = rng.between(1, base_sets);
    for (std::size_t i = 0; i < count; ++i) {
        PointSet s(rng.next() & whole.bits());
        if (s.empty()) s = PointSet::single(rng.below(points));
        base.push_back(s);
    }
    sort_canonical(base);
    const PointSet missing = whole.minus(union_of(base));
    if (!missing.empty()) {
        if (base.size() < base_sets)
            base.push_back(missing);
        else
            base.back() |= missing;
    }
    return FiniteSpace(std::move(labels), std::move(base));
}

CoverName random_cover_name(const Poset& poset, const FiniteSpace& space, Rng& rng, std::size_t noise) {
    CoverName name;
    const auto& base = space.base();
    for (std::size_t x = 0; x < space.size(); ++x) {
        std::vector<PointSet> holders;
        for (PointSet b : base)
            if (b.contains(x)) holders.push_back(b);
        for (Cond a : random_maximal_antichain(poset, rng))
            name.pairs.push_back({a, holders[rng.below(holders.size())]});
    }
    for (std::size_t i = 0; i < noise; ++i)
        name.pairs.push_back({cond_at(rng.below(poset.size())), base[rng.below(base.size())]});
    name.normalize();
    return name;
}

Scenario generate_scenario(std::uint64_t seed, const GenBounds& bounds, Property property, const Limits& limits) {
    bounds.check(limits);
    Rng rng(seed);

    std::vector<PosetSpec> kinds;
    for (std::size_t d = 1; d <= std::min<std::size_t>(3, limits.cohen_index); ++d) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < d; ++i) size *= 3;
        // stabilization d, plus at least one point
        if (size <= bounds.poset && d + 1 <= bounds.levels) kinds.push_back(PosetSpec::cohen(d));
    }
    for (unsigned k = 1; k <= std::min<unsigned>(2, static_cast<unsigned>(limits.measure_k)); ++k) {
        const std::size_t size = (std::size_t{1} << (1U << k)) - 1;
        if (size <= bounds.poset && k + 1 <= bounds.levels) kinds.push_back(PosetSpec::measure(k));
    }
    kinds.push_back(PosetSpec{});  // placeholder for an explicit order
    kinds.back().kind = PosetSpec::Kind::explicit_order;

    ForcingNotion notion;
    while (true) {
        PosetSpec spec = kinds[rng.below(kinds.size())];
        if (spec.kind == PosetSpec::Kind::explicit_order)
            spec = random_explicit_poset(rng, rng.between(3, std::min<std::size_t>(10, bounds.poset)));
        notion = make_forcing_notion(spec, limits);
        if (notion.strat.stabilization_index() + 1 <= bounds.levels) break;
    }

    const std::size_t floor = notion.strat.stabilization_index();
    const std::size_t points = rng.between(1, std::min(bounds.points, bounds.levels - floor));
    FiniteSpace space = random_space(rng, points, bounds.base);
    const std::size_t levels = rng.between(floor + points, bounds.levels);
    std::vector<CoverName> names;
    for (std::size_t n = 0; n < levels; ++n) {
        names.push_back(random_cover_name(*notion.poset, space, rng, rng.below(4)));
        if (!validate_cover_name(*notion.poset, space, names.back()))
            throw std::logic_error("generated cover name failed validation");
    }
    return Scenario{std::move(notion), "default", std::move(space), std::move(names), property};
}

}  // namespace endowlab
