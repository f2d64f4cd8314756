#include "doctest.h"
#include "superkoszul/ce.hpp"

using namespace superkoszul;

namespace {

std::vector<int> totals(const ComplexWindow& c)
{
    auto t = cohomology(c);
    std::vector<int> out;
    for (int n : c.interior())
        out.push_back(total_at(t, n));
    return out;
}

}  // namespace

TEST_CASE("CE cochains of sl11 with trivial coefficients")
{
    auto g = sl11();
    auto c = cochain_complex(g, trivial_module(g), 5);
    CHECK(verify_differential(c));
    CHECK(totals(c) == std::vector<int>{1, 2, 2, 2, 2});
    auto t = cohomology(c, 1);
    CHECK(t == CohomologyTable{{{1, -1, 0}, 1}, {{1, 1, 0}, 1}});
}

TEST_CASE("CE differential squares to zero")
{
    for (const auto& g : {sl11(), gl({{0, 1}, {1, 1}}), gl({{0, 2}, {1, 1}}), sl({{0, 1}, {1, 2}})}) {
        CHECK(is_module(g, trivial_module(g)));
        CHECK(is_module(g, adjoint_module(g)));
        CHECK(verify_differential(cochain_complex(g, trivial_module(g), 3)));
        CHECK(verify_differential(cochain_complex(g, adjoint_module(g), 3)));
        CHECK(verify_differential(chain_complex(g, 3)));
    }
}

TEST_CASE("chains dual to cochains")
{
    auto g = sl11();
    auto co = cochain_complex(g, trivial_module(g), 5);
    auto ch = chain_complex(g, 5);
    auto tc = cohomology(co);
    auto th = cohomology(ch);
    for (int n = 0; n <= 3; ++n)
        for (const auto& [d, k] : tc)
            if (d.coh == n)
                CHECK(th.at({-n, -d.s, -d.h}) == k);
}

TEST_CASE("chain coalgebra")
{
    for (const auto& g : {sl11(), gl({{0, 1}, {1, 1}})}) {
        auto c = chain_coalgebra(g, 4);
        CHECK(coassociative(c));
        CHECK(counit_laws(c));
        CHECK(is_coderivation(c));
        CHECK(conilpotency_index(c, 10) == 4);
    }
}

TEST_CASE("curved B of sl11")
{
    auto b = curved_B(sl11());
    const auto& p = b.presentation;
    REQUIRE(p.size() == 3);
    CHECK(p.generators()[0].name == "h");
    auto rs = complete(p, 8);
    CHECK(rs.normal_form(b.curvature) == rs.normal_form(p.parse("h*y_e*y_f")));
    CHECK(rs.is_complete());
    CHECK(is_central(b.curvature, rs));
}

TEST_CASE("curvature is central for gl(1|1)")
{
    auto b = curved_B(gl({{0, 1}, {1, 1}}));
    auto rs = complete(b.presentation, 8);
    CHECK(rs.is_complete());
    CHECK(!b.curvature.is_zero());
    CHECK(is_central(b.curvature, rs));
}
