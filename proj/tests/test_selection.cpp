#include <doctest.h>

#include <map>

#include "endowlab/error.hpp"
#include "endowlab/generate.hpp"
#include "endowlab/selection.hpp"

using namespace endowlab;

namespace {

FiniteSpace xy(std::vector<std::vector<std::string>> base) {
    std::vector<PointSet> sets;
    const FiniteSpace probe({"x", "y", "z"}, {PointSet::full(3)});
    for (const auto& b : base) sets.push_back(probe.set_of(b));
    return FiniteSpace({"x", "y"}, sets);
}

FiniteSpace discrete(std::size_t n) {
    std::vector<std::string> points;
    std::vector<PointSet> base;
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back("p" + std::to_string(i));
        base.push_back(PointSet::single(i));
    }
    return FiniteSpace(points, base);
}

SelectionProblem problem(std::vector<std::vector<PointSet>> covers, std::size_t floor, Property mode) {
    for (auto& c : covers) sort_canonical(c);
    return SelectionProblem{std::move(covers), floor, mode};
}

// Closure of the base under finite intersections and arbitrary unions, by brute force.
std::set<std::uint64_t> reference_topology(const FiniteSpace& s) {
    std::set<std::uint64_t> meets;
    const auto& base = s.base();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << base.size()); ++m) {
        std::uint64_t x = s.whole().bits();
        for (std::size_t i = 0; i < base.size(); ++i)
            if ((m >> i) & 1U) x &= base[i].bits();
        meets.insert(x);
    }
    meets.insert(s.whole().bits());
    std::set<std::uint64_t> out{0};
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << s.size()); ++u) {
        std::uint64_t joined = 0;
        for (std::uint64_t m : meets)
            if ((m & ~u) == 0) joined |= m;
        if (joined == u) out.insert(u);
    }
    return out;
}

std::vector<PointSet> random_cover(const FiniteSpace& s, Rng& rng) {
    std::vector<PointSet> cover;
    const auto& top = s.topology();
    while (!s.whole().subset_of(union_of(cover)) || rng.chance(1, 3)) {
        const PointSet u = top[rng.below(top.size())];
        if (!u.empty()) cover.push_back(u);
    }
    sort_canonical(cover);
    return cover;
}

SelectionProblem random_problem(const FiniteSpace& s, Rng& rng, Property mode, std::size_t max_levels) {
    SelectionProblem p;
    const std::size_t levels = rng.between(1, max_levels);
    for (std::size_t n = 0; n < levels; ++n) p.covers.push_back(random_cover(s, rng));
    p.horizon_floor = rng.below(levels);
    p.mode = mode;
    return p;
}

PointSet late_union(const SelectionProblem& p, const std::vector<PointSet>& picks) {
    PointSet out;
    for (std::size_t n = p.horizon_floor; n < picks.size(); ++n) out |= picks[n];
    return out;
}

// First Rothberger solution in level-by-level canonical order, by enumeration.
std::optional<std::vector<PointSet>> brute_rothberger(const FiniteSpace& s, const SelectionProblem& p) {
    std::vector<PointSet> picks(p.covers.size());
    std::optional<std::vector<PointSet>> found;
    auto rec = [&](auto&& self, std::size_t n) -> void {
        if (found) return;
        if (n == p.covers.size()) {
            if (s.whole().subset_of(late_union(p, picks))) found = picks;
            return;
        }
        for (PointSet u : p.covers[n]) {
            picks[n] = u;
            self(self, n + 1);
        }
    };
    rec(rec, 0);
    return found;
}

// Least total size of a Menger selection, by enumeration of all subfamilies.
std::optional<std::size_t> brute_menger(const FiniteSpace& s, const SelectionProblem& p) {
    std::optional<std::size_t> best;
    std::vector<PointSet> unions(p.covers.size());
    auto rec = [&](auto&& self, std::size_t n, std::size_t size) -> void {
        if (n == p.covers.size()) {
            if (s.whole().subset_of(late_union(p, unions)) && (!best || size < *best)) best = size;
            return;
        }
        const auto& c = p.covers[n];
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.size()); ++m) {
            PointSet u;
            for (std::size_t i = 0; i < c.size(); ++i)
                if ((m >> i) & 1U) u |= c[i];
            unions[n] = u;
            self(self, n + 1, size + static_cast<std::size_t>(std::popcount(m)));
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Whether some choice of pairwise-disjoint refining families hits everything late.
bool brute_screenable(const FiniteSpace& s, const SelectionProblem& p) {
    std::vector<std::set<std::uint64_t>> reachable;
    for (const auto& cover : p.covers) {
        std::vector<PointSet> pieces;
        for (PointSet o : s.topology())
            if (!o.empty() && std::any_of(cover.begin(), cover.end(), [&](PointSet u) { return o.subset_of(u); }))
                pieces.push_back(o);
        std::set<std::uint64_t> unions{0};
        auto rec = [&](auto&& self, std::size_t i, PointSet used) -> void {
            unions.insert(used.bits());
            for (std::size_t j = i; j < pieces.size(); ++j)
                if (pieces[j].disjoint(used)) self(self, j + 1, used | pieces[j]);
        };
        rec(rec, 0, PointSet());
        reachable.push_back(unions);
    }
    std::set<std::uint64_t> acc{0};
    for (std::size_t n = p.horizon_floor; n < reachable.size(); ++n) {
        std::set<std::uint64_t> next;
        for (std::uint64_t a : acc)
            for (std::uint64_t b : reachable[n]) next.insert(a | b);
        acc = next;
    }
    return acc.count(s.whole().bits()) > 0;
}

}  // namespace

TEST_CASE("spaces") {
    SUBCASE("topology is the closure of the base") {
        Rng rng(3);
        for (int i = 0; i < 60; ++i) {
            const FiniteSpace s = random_space(rng, rng.between(1, 6), rng.between(1, 8));
            std::set<std::uint64_t> got;
            for (PointSet o : s.topology()) got.insert(o.bits());
            CHECK(got == reference_topology(s));
            CHECK(s.is_open(PointSet()));
            CHECK(s.is_open(s.whole()));
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(FiniteSpace({"x", "y"}, {PointSet(1)}), InputError);
        CHECK_THROWS_AS(FiniteSpace({"x", "x"}, {PointSet(3)}), InputError);
        CHECK_THROWS_AS(xy({{"x"}}).point("q"), InputError);
        CHECK(xy({{"x"}, {"x", "y"}}).format(PointSet(3)) == "{x,y}");
    }
    SUBCASE("canonical set order") {
        const FiniteSpace s = xy({{"x"}, {"y"}});
        CHECK(canonical_less(s.set_of({"x"}), s.set_of({"x", "y"})));
        CHECK(canonical_less(s.set_of({"x", "y"}), s.set_of({"y"})));
        CHECK(canonical_less(PointSet(), s.set_of({"x"})));
    }
}

TEST_CASE("refinement examples") {
    const FiniteSpace s = xy({{"x"}, {"y"}});
    const PointSet x = s.set_of({"x"}), y = s.set_of({"y"}), both = s.whole();
    Refinement r = refines(s, {x}, {x, both});
    CHECK(r.holds);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == std::pair{x, x});
    CHECK(refines(s, {}, {x}).holds);
    r = refines(s, {both}, {x, y});
    CHECK_FALSE(r.holds);
    CHECK(r.counterexample == both);
    const FiniteSpace coarse = xy({{"x"}, {"x", "y"}});
    CHECK_THROWS_AS(refines(coarse, {coarse.set_of({"y"})}, {coarse.whole()}), InputError);
}

TEST_CASE("Rothberger examples") {
    const FiniteSpace s = xy({{"x"}, {"y"}});
    const PointSet x = s.set_of({"x"}), y = s.set_of({"y"});
    auto one = rothberger_select(s, problem({{s.whole()}}, 0, Property::rothberger));
    REQUIRE(one);
    CHECK(*one == std::vector<PointSet>{s.whole()});
    auto two = rothberger_select(s, problem({{x, y}, {x, y}}, 0, Property::rothberger));
    REQUIRE(two);
    CHECK(*two == std::vector<PointSet>{x, y});
    CHECK_FALSE(rothberger_select(s, problem({{x, y}}, 0, Property::rothberger)));
    // Hits below the floor do not count.
    CHECK_FALSE(rothberger_select(s, problem({{x, y}, {x, y}}, 1, Property::rothberger)));
    CHECK_FALSE(rothberger_select(s, problem({{x, y}}, 1, Property::rothberger)));
}

TEST_CASE("Menger examples") {
    const FiniteSpace s = xy({{"x"}, {"y"}});
    const PointSet x = s.set_of({"x"}), y = s.set_of({"y"});
    auto sel = menger_select(s, problem({{x, y}}, 0, Property::menger));
    REQUIRE(sel);
    CHECK(sel->families == std::vector<std::vector<PointSet>>{{x, y}});
    const FiniteSpace empty({}, {});
    auto none = menger_select(empty, problem({{}, {}}, 0, Property::menger));
    REQUIRE(none);
    for (const auto& f : none->families) CHECK(f.empty());
}

TEST_CASE("selective screenability examples") {
    const FiniteSpace d = xy({{"x"}, {"y"}});
    auto whole = selective_screenability_select(d, problem({{d.whole()}}, 0, Property::selective_screenability));
    REQUIRE(whole);
    CHECK(whole->families == std::vector<std::vector<PointSet>>{{d.whole()}});
    // Only overlapping neighbourhoods: every open set around x or y contains z.
    const FiniteSpace v({"x", "y", "z"}, {PointSet(0b101), PointSet(0b110)});
    const auto p = problem({{PointSet(0b101), PointSet(0b110)}}, 0, Property::selective_screenability);
    CHECK_FALSE(selective_screenability_select(v, p));
    CHECK_FALSE(brute_screenable(v, p));
}

TEST_CASE("property: solvers agree with enumeration on small instances") {
    Rng rng(97);
    std::size_t solvable[3] = {0, 0, 0}, total = 0;
    for (int i = 0; i < 250; ++i) {
        const FiniteSpace s = random_space(rng, rng.between(1, 4), rng.between(1, 5));
        SelectionProblem rp = random_problem(s, rng, Property::rothberger, 4);
        bool small = true;
        for (const auto& c : rp.covers) small = small && c.size() <= 6;
        if (!small) continue;
        ++total;
        std::string why;

        const auto r = rothberger_select(s, rp);
        const auto rb = brute_rothberger(s, rp);
        CHECK(r.has_value() == rb.has_value());
        if (r && rb) CHECK(*r == *rb);
        solvable[0] += r.has_value();

        SelectionProblem mp = rp;
        mp.mode = Property::menger;
        const auto m = menger_select(s, mp);
        const auto mb = brute_menger(s, mp);
        CHECK(m.has_value() == mb.has_value());
        if (m) {
            CHECK(check_selection(s, mp, *m, &why));
            std::size_t size = 0;
            for (const auto& f : m->families) size += f.size();
            std::size_t elements = 0;
            for (const auto& c : mp.covers) elements += c.size();
            if (elements <= 12) CHECK(size == *mb);
        }
        solvable[1] += m.has_value();

        SelectionProblem sp = rp;
        sp.mode = Property::selective_screenability;
        const auto ss = selective_screenability_select(s, sp);
        CHECK(ss.has_value() == brute_screenable(s, sp));
        if (ss) CHECK(check_selection(s, sp, *ss, &why));
        solvable[2] += ss.has_value();
    }
    CHECK(total > 100);
    // With a level at or above the floor Menger is always solvable; unsolvable
    // screenability instances are rare here and covered by the example above.
    for (std::size_t k : solvable) CHECK(k > 0);
    CHECK(solvable[0] < total);
    CHECK(solvable[1] == total);
}

TEST_CASE("property: Rothberger implies Menger; on discrete spaces Menger implies screenability") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const bool make_discrete = i % 2 == 0;
        const FiniteSpace s = make_discrete ? discrete(rng.between(1, 4)) : random_space(rng, rng.between(1, 5), 6);
        SelectionProblem p = random_problem(s, rng, Property::rothberger, 5);
        const auto r = select(s, p);
        p.mode = Property::menger;
        const auto m = select(s, p);
        if (r) {
            REQUIRE(m);
            CHECK(check_selection(s, p, *r));  // singletons are a Menger selection
        }
        p.mode = Property::selective_screenability;
        const auto ss = select(s, p);
        if (make_discrete && m) CHECK(ss);
        if (r) CHECK(ss);
    }
}

TEST_CASE("the checker rejects broken selections") {
    const FiniteSpace s = xy({{"x"}, {"y"}});
    const PointSet x = s.set_of({"x"}), y = s.set_of({"y"});
    const auto p = problem({{x, y}, {x, y}}, 0, Property::rothberger);
    std::string why;
    CHECK(check_selection(s, p, Selection{{{x}, {y}}}, &why));
    CHECK_FALSE(check_selection(s, p, Selection{{{x}, {x}}}, &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(check_selection(s, p, Selection{{{x, y}, {y}}}, &why));
    CHECK_FALSE(check_selection(s, p, Selection{{{x}}}, &why));
    auto sp = p;
    sp.mode = Property::selective_screenability;
    CHECK_FALSE(check_selection(s, sp, Selection{{{s.whole()}, {}}}, &why));
    CHECK_THROWS_AS(validate_problem(s, problem({{x}}, 0, Property::rothberger)), InputError);
}

TEST_CASE("property names") {
    CHECK(parse_property("menger") == Property::menger);
    CHECK(to_string(Property::selective_screenability) == "selective-screenability");
    CHECK_THROWS_AS(parse_property("lindelof"), UsageError);
}
