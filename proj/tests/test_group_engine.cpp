#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cgt/algebra.hpp"
#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/group_spec.hpp"
#include "cgt/numutil.hpp"
#include "cgt/subgroup.hpp"
#include "support/group_oracles.hpp"

using namespace cgt;
using Index = EnumeratedGroup::Index;

namespace {

GroupSpec s3_spec() { return GroupSpec::perm(3, {{2, 1, 3}, {2, 3, 1}}); }
GroupSpec s4_spec() { return GroupSpec::perm(4, {{2, 1, 3, 4}, {2, 3, 4, 1}}); }
GroupSpec a5_spec() { return GroupSpec::perm(5, {{2, 3, 4, 5, 1}, {2, 3, 1, 4, 5}}); }
GroupSpec q8_spec() {
    return GroupSpec::perm(8, {{3, 4, 2, 1, 7, 8, 6, 5}, {5, 6, 8, 7, 2, 1, 3, 4}});
}
GroupSpec f21_spec() { return GroupSpec::extension({7}, {3}, {{2}}); }

std::uint64_t full_class_size(const EnumeratedGroup& g, Index x) {
    std::vector<char> in_class(g.order(), 0);
    std::uint64_t size = 0;
    for (Index t = 0; t < g.order(); ++t) {
        const Index c = g.conjugate(x, t);
        if (!in_class[c]) {
            in_class[c] = 1;
            ++size;
        }
    }
    return size;
}

} // namespace

TEST_CASE("cyclic group basics") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(GroupSpec::cyclic(12));
    CHECK(g.order() == 12);
    CHECK(is_abelian_group(g));
    CHECK(is_cyclic_subgroup(g, full_group(g)));
    CHECK(center(g).order() == 12);
    const std::vector<std::uint32_t> expected{1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12};
    CHECK(g.element_orders() == expected);
    FittingData fd = fitting_series(g);
    CHECK(fd.fitting.order() == 12);
    CHECK(fd.height == 1);
    CHECK(fd.solvable);
}

TEST_CASE("canonical element layout") {
    for (const GroupSpec& spec : {s3_spec(), s4_spec(), q8_spec(), f21_spec()}) {
        EnumeratedGroup g = EnumeratedGroup::from_spec(spec);
        CHECK(std::is_sorted(g.element_orders().begin(), g.element_orders().end()));
        CHECK(g.element_order(0) == 1);
        for (Index x = 0; x < g.order(); ++x) {
            CHECK(g.mult(0, x) == x);
            CHECK(g.mult(x, g.inverse(x)) == 0);
            CHECK(g.power(x, g.element_order(x)) == 0);
            CHECK(g.power(x, 1) == x);
        }
        for (Index x = 0; x < g.order(); ++x)
            for (Index t : g.generators())
                CHECK(g.element_order(g.conjugate(x, t)) == g.element_order(x));
        for (Index a : g.generators())
            for (Index b : g.generators())
                CHECK((g.commutator(a, b) == 0) == (g.mult(a, b) == g.mult(b, a)));
    }
}

TEST_CASE("symmetric group on three points") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(s3_spec());
    CHECK(g.order() == 6);
    CHECK_FALSE(is_abelian_group(g));
    CHECK(center(g).order() == 1);
    CHECK(oracle::class_sizes_by_full_conjugation(g) == std::vector<std::uint64_t>{1, 2, 3});

    Subgroup d = derived_subgroup(g);
    CHECK(d.order() == 3);
    CHECK(is_normal_in(g, d));
    CHECK(sylow_subgroup(g, 2).order() == 2);
    CHECK(sylow_subgroup(g, 3).order() == 3);
    CHECK_FALSE(is_normal_in(g, sylow_subgroup(g, 2)));
    CHECK(is_normal_in(g, sylow_subgroup(g, 3)));
    CHECK(p_core(g, 2).order() == 1);
    CHECK(p_core(g, 3).order() == 3);

    FittingData fd = fitting_series(g);
    CHECK(fd.fitting.order() == 3);
    CHECK(fd.series_orders == std::vector<std::uint64_t>{3, 6});
    CHECK(fd.height == 2);
    CHECK(fd.solvable);
    CHECK(is_solvable(g));

    CHECK(is_p_nilpotent(g, 2));
    CHECK_FALSE(is_p_nilpotent(g, 3));
}

TEST_CASE("symmetric group on four points") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(s4_spec());
    CHECK(g.order() == 24);
    CHECK(oracle::class_sizes_by_full_conjugation(g) ==
          std::vector<std::uint64_t>{1, 3, 6, 6, 8});

    Subgroup d1 = derived_subgroup(g);
    CHECK(d1.order() == 12);
    Subgroup d2 = derived_subgroup(g, &d1);
    CHECK(d2.order() == 4);
    Subgroup d3 = derived_subgroup(g, &d2);
    CHECK(d3.order() == 1);

    CHECK(sylow_subgroup(g, 2).order() == 8);
    CHECK(sylow_subgroup(g, 3).order() == 3);
    CHECK(p_core(g, 2).order() == 4);
    CHECK(p_core(g, 3).order() == 1);

    FittingData fd = fitting_series(g);
    CHECK(fd.fitting.order() == 4);
    CHECK(fd.series_orders == std::vector<std::uint64_t>{4, 12, 24});
    CHECK(fd.height == 3);
    CHECK(is_solvable(g));

    // centralizer orders split involutions into transpositions and products
    // of two transpositions
    std::vector<std::uint64_t> cent_orders;
    for (Index x = 0; x < g.order(); ++x)
        if (g.element_order(x) == 2) cent_orders.push_back(centralizer(g, x).order());
    std::sort(cent_orders.begin(), cent_orders.end());
    cent_orders.erase(std::unique(cent_orders.begin(), cent_orders.end()), cent_orders.end());
    CHECK(cent_orders == std::vector<std::uint64_t>{4, 8});

    // orbit-stabilizer over every element
    for (Index x = 0; x < g.order(); ++x)
        CHECK(centralizer(g, x).order() * full_class_size(g, x) == 24);
}

TEST_CASE("normal closures in the symmetric group") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(s4_spec());
    Index transposition = UINT32_MAX, double_transposition = UINT32_MAX, three_cycle = UINT32_MAX;
    for (Index x = 1; x < g.order(); ++x) {
        if (g.element_order(x) == 2 && full_class_size(g, x) == 6 && transposition == UINT32_MAX)
            transposition = x;
        if (g.element_order(x) == 2 && full_class_size(g, x) == 3 &&
            double_transposition == UINT32_MAX)
            double_transposition = x;
        if (g.element_order(x) == 3 && three_cycle == UINT32_MAX) three_cycle = x;
    }
    CHECK(normal_closure(g, {transposition}).order() == 24);
    CHECK(normal_closure(g, {double_transposition}).order() == 4);
    CHECK(normal_closure(g, {three_cycle}).order() == 12);
}

TEST_CASE("quaternion group") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(q8_spec());
    CHECK(g.order() == 8);
    CHECK(center(g).order() == 2);
    CHECK(derived_subgroup(g).order() == 2);
    CHECK(is_nilpotent_group(g));
    CHECK(oracle::class_sizes_by_full_conjugation(g) ==
          std::vector<std::uint64_t>{1, 1, 2, 2, 2});
    const std::vector<std::uint32_t> expected{1, 2, 4, 4, 4, 4, 4, 4};
    CHECK(g.element_orders() == expected);
    Subgroup frat = frattini_of_p_group(g, full_group(g), 2);
    CHECK(frat.order() == 2);
    CHECK(frat.same_members(center(g)));
}

TEST_CASE("alternating group on five points") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(a5_spec());
    CHECK(g.order() == 60);
    CHECK_FALSE(is_solvable(g));
    FittingData fd = fitting_series(g);
    CHECK(fd.fitting.order() == 1);
    CHECK_FALSE(fd.height.has_value());
    CHECK_FALSE(fd.solvable);
    CHECK(fd.series_orders.empty());

    CHECK(hall_subgroup(g, {2, 3}).order() == 12);
    CHECK_FALSE(try_hall_subgroup(g, {2, 5}).has_value());
    CHECK_FALSE(try_hall_subgroup(g, {3, 5}).has_value());
    CHECK_THROWS_AS((void)hall_subgroup(g, {2, 5}), HallNotFound);

    CHECK_FALSE(is_p_nilpotent(g, 2));
    CHECK_FALSE(is_p_nilpotent(g, 5));
}

TEST_CASE("frobenius group of order 21") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(f21_spec());
    CHECK(g.order() == 21);
    CHECK(oracle::class_sizes_by_full_conjugation(g) ==
          std::vector<std::uint64_t>{1, 3, 3, 7, 7});
    CHECK(center(g).order() == 1);
    CHECK(fitting_subgroup(g).order() == 7);
    CHECK_FALSE(is_normal_in(g, sylow_subgroup(g, 3)));
    FittingData fd = fitting_series(g);
    CHECK(fd.series_orders == std::vector<std::uint64_t>{7, 21});
    CHECK(fd.height == 2);

    QuotientResult q = quotient_group(g, p_core(g, 7));
    CHECK(q.group.order() == 3);
    CHECK(is_abelian_group(q.group));
}

TEST_CASE("dihedral extension spec") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(GroupSpec::extension({7}, {2}, {{6}}));
    CHECK(g.order() == 14);
    CHECK(oracle::class_sizes_by_full_conjugation(g) ==
          std::vector<std::uint64_t>{1, 2, 2, 2, 7});
    CHECK_THROWS_AS((void)EnumeratedGroup::from_spec(GroupSpec::extension({7}, {2}, {{2}})),
                    MalformedSpec);
    CHECK_THROWS_AS((void)EnumeratedGroup::from_spec(GroupSpec::extension({7}, {2}, {{0}})),
                    MalformedSpec);
}

TEST_CASE("direct product spec") {
    EnumeratedGroup g =
        EnumeratedGroup::from_spec(GroupSpec::direct({s3_spec(), GroupSpec::cyclic(5)}));
    CHECK(g.order() == 30);
    CHECK(center(g).order() == 5);
    CHECK_FALSE(is_nilpotent_group(g));
    CHECK(is_solvable(g));
    CHECK(oracle::class_sizes_by_full_conjugation(g) ==
          std::vector<std::uint64_t>{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3});

    Subgroup h = hall_subgroup(g, {2, 5}, 7);
    CHECK(h.order() == 10);
    Subgroup h2 = hall_subgroup(g, {2, 5}, 7);
    CHECK(h.same_members(h2));
    CHECK(hall_subgroup(g, {2, 5}, 8).order() == 10);
}

TEST_CASE("table specs") {
    const std::vector<std::vector<std::uint32_t>> c4{
        {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    EnumeratedGroup g = EnumeratedGroup::from_spec(GroupSpec::table(c4));
    CHECK(g.order() == 4);
    CHECK(is_cyclic_subgroup(g, full_group(g)));
    CHECK_FALSE(g.generators().empty());

    const std::vector<std::vector<std::uint32_t>> broken{
        {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 3}};
    CHECK_THROWS_AS((void)EnumeratedGroup::from_spec(GroupSpec::table(broken)), MalformedSpec);

    // Latin square with two-sided identity that fails associativity.
    const std::vector<std::vector<std::uint32_t>> loop{{0, 1, 2, 3, 4},
                                                       {1, 0, 3, 4, 2},
                                                       {2, 3, 4, 0, 1},
                                                       {3, 4, 1, 2, 0},
                                                       {4, 2, 0, 1, 3}};
    CHECK_THROWS_AS((void)EnumeratedGroup::from_spec(GroupSpec::table(loop)), MalformedSpec);
}

TEST_CASE("order cap") {
    try {
        (void)EnumeratedGroup::from_spec(GroupSpec::cyclic(200000));
        FAIL("expected OrderExceedsCap");
    } catch (const OrderExceedsCap& e) {
        CHECK(e.projected == 200000);
        CHECK(e.cap == 100000);
    }
    GroupSpec s9 = GroupSpec::perm(9, {{2, 1, 3, 4, 5, 6, 7, 8, 9},
                                       {2, 3, 4, 5, 6, 7, 8, 9, 1}});
    CHECK_THROWS_AS((void)EnumeratedGroup::from_spec(s9), OrderExceedsCap);
    CHECK(EnumeratedGroup::from_spec(s9, 400000).order() == 362880);
}

TEST_CASE("sylow and core properties across the catalog") {
    for (const GroupSpec& spec :
         {s3_spec(), s4_spec(), q8_spec(), f21_spec(), a5_spec(),
          GroupSpec::direct({s3_spec(), GroupSpec::cyclic(5)})}) {
        EnumeratedGroup g = EnumeratedGroup::from_spec(spec);
        for (std::uint64_t p : prime_divisors(g.order())) {
            Subgroup s = sylow_subgroup(g, p);
            CHECK(s.order() == p_part(g.order(), p));
            CHECK(oracle::is_subgroup_set(g, s));
            for (Index m : s.members) {
                std::uint64_t o = g.element_order(m);
                while (o % p == 0) o /= p;
                CHECK(o == 1);
            }
            Subgroup core = p_core(g, p);
            CHECK(core.same_members(oracle::p_core_by_sylow_intersection(g, p)));
            CHECK(is_normal_in(g, core));
        }
        Subgroup fit = fitting_subgroup(g);
        CHECK(is_normal_in(g, fit));
        CHECK(is_nilpotent_group(materialize(fit).group));
        CHECK(fitting_series(g).solvable == is_solvable(g));
    }
}

TEST_CASE("quotient of the symmetric group by its core") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(s4_spec());
    QuotientResult q = quotient_group(g, p_core(g, 2));
    CHECK(q.group.order() == 6);
    CHECK_FALSE(is_abelian_group(q.group));
    CHECK(oracle::class_sizes_by_full_conjugation(q.group) ==
          std::vector<std::uint64_t>{1, 2, 3});
    for (Index x = 0; x < g.order(); ++x)
        for (Index t : g.generators())
            CHECK(q.projection[g.mult(x, t)] == q.group.mult(q.projection[x], q.projection[t]));

    Subgroup odd = sylow_subgroup(g, 3);
    CHECK_THROWS_AS((void)quotient_group(g, odd), NotNormal);
}

TEST_CASE("materialized subgroup round trip") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(s4_spec());
    Subgroup alt = derived_subgroup(g);
    MaterializedSubgroup m = materialize(alt);
    CHECK(m.group.order() == 12);
    CHECK(oracle::class_sizes_by_full_conjugation(m.group) ==
          std::vector<std::uint64_t>{1, 3, 4, 4});
    for (Index c = 0; c < m.group.order(); ++c)
        CHECK(m.from_parent[m.to_parent[c]] == c);
    for (Index a = 0; a < m.group.order(); ++a)
        for (Index b = 0; b < m.group.order(); ++b)
            CHECK(m.to_parent[m.group.mult(a, b)] == g.mult(m.to_parent[a], m.to_parent[b]));
}

TEST_CASE("bounded closures and product sets") {
    EnumeratedGroup g = EnumeratedGroup::from_spec(s4_spec());
    CHECK_FALSE(subgroup_closure_bounded(g, g.generators(), 10).has_value());
    CHECK(subgroup_closure_bounded(g, g.generators(), 24)->order() == 24);

    Index t1 = UINT32_MAX, t2 = UINT32_MAX;
    for (Index x = 1; x < g.order(); ++x)
        if (g.element_order(x) == 2 && full_class_size(g, x) == 6) {
            if (t1 == UINT32_MAX)
                t1 = x;
            else if (g.mult(t1, x) == g.mult(x, t1) && t2 == UINT32_MAX)
                t2 = x; // the disjoint transposition commutes with t1
        }
    Subgroup a = subgroup_closure(g, {t1});
    Subgroup b = subgroup_closure(g, {t2});
    CHECK(product_set_size(a, b) == 4);
    CHECK(product_set_size(a, a) == 2);
}

TEST_CASE("large group without a cached table") {
    EnumeratedGroup g =
        EnumeratedGroup::from_spec(GroupSpec::extension({31, 7}, {5, 6}, {{16, 1}, {26, 3}}));
    CHECK(g.order() == 6510);
    CHECK_FALSE(g.has_cached_table());
    EnumeratedGroup small = EnumeratedGroup::from_spec(s4_spec());
    CHECK(small.has_cached_table());
    for (Index x : {Index(1), Index(100), Index(6509)}) {
        CHECK(g.mult(x, g.inverse(x)) == 0);
        CHECK(g.power(x, g.element_order(x)) == 0);
    }
}

TEST_CASE("spec json round trip") {
    for (const GroupSpec& spec :
         {s4_spec(), f21_spec(), GroupSpec::direct({s3_spec(), GroupSpec::cyclic(5)}),
          GroupSpec::table({{0, 1}, {1, 0}})}) {
        GroupSpec back = GroupSpec::from_json_text(spec.to_json_text());
        CHECK(back.digest() == spec.digest());
        CHECK(back.kind() == spec.kind());
    }
    CHECK(f21_spec().projected_order() == 21);
    CHECK_FALSE(s4_spec().projected_order().has_value());
    CHECK_THROWS_AS((void)GroupSpec::from_json_text("{\"degree\":3}"), MalformedSpec);
    CHECK_THROWS_AS((void)GroupSpec::from_json_text("not json"), MalformedSpec);
    CHECK_THROWS_AS(GroupSpec::perm(3, {{1, 1, 2}}).validate(), MalformedSpec);
}
