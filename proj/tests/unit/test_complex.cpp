#include "doctest.h"
#include "superkoszul/complex.hpp"
#include "superkoszul/error.hpp"

using namespace superkoszul;

namespace {

GradedSpace line(const std::string& name, int coh, int s = 0)
{
    return GradedSpace(std::vector<BasisVector>{BasisVector{name, {coh, s, 0}}});
}

// k --c--> k in degrees 0 and 1.
ComplexWindow two_term(const Rational& c, bool closed)
{
    ComplexWindow x(0, 1, closed, closed);
    x.set_space(0, line("a", 0));
    x.set_space(1, line("b", 1));
    GradedMap d(x.space(0), x.space(1), {1, 0, 0});
    if (c != 0)
        d.add(0, 0, c);
    x.set_differential(0, d);
    return x;
}

}  // namespace

TEST_CASE("two-term complexes")
{
    auto iso = two_term(3, true);
    CHECK(verify_differential(iso));
    CHECK(cohomology(iso).empty());
    auto zero = two_term(0, true);
    CHECK(cohomology(zero) == CohomologyTable{{{0, 0, 0}, 1}, {{1, 0, 0}, 1}});
    CHECK(euler_characteristic(zero).empty());
}

TEST_CASE("window edges are not reported")
{
    auto open = two_term(1, false);
    CHECK(open.interior().empty());
    CHECK_THROWS_AS(cohomology(open, 0), Error);
}

TEST_CASE("space degrees are enforced")
{
    ComplexWindow x(0, 1, true, true);
    CHECK_THROWS_AS(x.set_space(0, line("a", 1)), Error);
}

TEST_CASE("cone of the identity is acyclic")
{
    auto c = two_term(0, true);
    std::map<int, GradedMap> f;
    for (int n = 0; n <= 1; ++n)
        f.emplace(n, identity_map(c.space(n)));
    auto k = cone(c, c, f);
    CHECK(verify_differential(k));
    for (int n : k.interior())
        CHECK(total_at(cohomology(k, n), n) == 0);
}

TEST_CASE("totalization of a commuting square")
{
    Bicomplex b;
    b.spaces.emplace(std::pair{0, 0}, line("p", 0));
    b.spaces.emplace(std::pair{1, 0}, line("q", 1));
    b.spaces.emplace(std::pair{0, 1}, line("r", 1));
    b.spaces.emplace(std::pair{1, 1}, line("t", 2));
    auto arrow = [&](std::pair<int, int> from, std::pair<int, int> to) {
        GradedMap m(b.spaces.at(from), b.spaces.at(to), {1, 0, 0});
        m.add(0, 0, 1);
        return m;
    };
    b.horizontal.emplace(std::pair{0, 0}, arrow({0, 0}, {1, 0}));
    b.horizontal.emplace(std::pair{0, 1}, arrow({0, 1}, {1, 1}));
    b.vertical.emplace(std::pair{0, 0}, arrow({0, 0}, {0, 1}));
    b.vertical.emplace(std::pair{1, 0}, arrow({1, 0}, {1, 1}));
    auto tot = totalize(b, true, true);
    CHECK(verify_differential(tot));
    CHECK(cohomology(tot).empty());
}

TEST_CASE("subcomplex bookkeeping")
{
    auto c = two_term(1, true);
    auto all = whole(c);
    auto im = image(c, all);
    CHECK(contains(c, all, im));
    CHECK(subquotient_cohomology(c, all, im) == std::map<int, int>{{0, 1}, {1, 0}});
    CHECK(subquotient_cohomology(c, im, Subcomplex{}) == std::map<int, int>{{0, 0}, {1, 1}});
}
