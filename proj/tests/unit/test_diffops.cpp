#include "doctest.h"
#include "superkoszul/diffops.hpp"
#include "superkoszul/error.hpp"
#include "superkoszul/supercomm.hpp"

using namespace superkoszul;

namespace {

SuperSpace torus_line() { return {{{"t", 0, true, 1}, {"eps", 1, false, 1}}}; }
SuperSpace line() { return {{{"x", 0}}}; }
SuperSpace line_odd() { return {{{"x", 0}, {"eps", 1}}}; }

bool acyclic(const ComplexWindow& c)
{
    for (const auto& [d, n] : cohomology(c))
        if (n != 0)
            return false;
    return true;
}

CohomologyTable nonzero(const CohomologyTable& t)
{
    CohomologyTable out;
    for (const auto& [d, n] : t)
        if (n)
            out[d] = n;
    return out;
}

}  // namespace

TEST_CASE("Weyl algebra on the torus line with one odd direction")
{
    auto d = weyl_algebra(torus_line());
    const auto& p = d.presentation;
    auto rs = complete(p, 8);
    REQUIRE(rs.is_complete());
    auto t = p.gen("t"), e = p.gen("eps"), dt = p.gen("d_t"), de = p.gen("d_eps"), ti = p.gen("t_inv");
    CHECK(rs.normal_form(dt * t) == rs.normal_form(t * dt + Element::scalar(1)));
    CHECK(rs.normal_form(de * e + e * de) == Element::scalar(1));
    CHECK(rs.normal_form(e * e).is_zero());
    CHECK(rs.normal_form(de * de).is_zero());
    CHECK(rs.normal_form(t * ti) == Element::scalar(1));
    CHECK(rs.normal_form(ti * t) == Element::scalar(1));
    // ∂_t t⁻¹ = t⁻¹∂_t − t⁻², checked against the unit relation.
    CHECK(rs.normal_form(t * (dt * ti - ti * dt + ti * ti)).is_zero());
    CHECK(p.generators()[p.at("d_t")].tweight == -1);
    CHECK(p.generators()[p.at("t_inv")].tweight == -1);
    for (const auto& r : p.relations())
        CHECK(rs.normal_form(r).is_zero());
}

TEST_CASE("Weyl algebra dims and its associated graded")
{
    auto d = weyl_algebra(line());
    auto rs = complete(d.presentation, 8);
    auto h = hilbert(rs, Grading::WordLength, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(h[n] == n + 1);
    CHECK(weyl_algebra(SuperSpace{}).presentation.size() == 0);

    // gr is graded-commutative with the Hilbert table of the cotangent
    // superspace, counted independently as super-symmetric monomials.
    for (const auto& s : {line(), line_odd(), SuperSpace{{{"a", 1}, {"b", 1}}}}) {
        auto dw = weyl_algebra(s);
        auto gr = associated_graded(dw.presentation);
        auto grs = complete(gr, 10);
        for (std::size_t g = 0; g < gr.size(); ++g)
            CHECK(is_central(Element::letter(static_cast<int>(g)), grs));
        std::vector<SuperVar> vars;
        for (const auto& c : s.coordinates) {
            vars.push_back({c.name, {0, c.s, 0}});
            vars.push_back({partial_name(c.name), {0, -c.s, 0}});
        }
        SuperRing cot(vars);
        auto hg = hilbert(grs, Grading::WordLength, 5);
        for (int n = 0; n <= 5; ++n)
            CHECK(hg[n] == static_cast<long>(cot.monomials_of_length(n).size()));
    }
}

TEST_CASE("omega algebra and de Rham windows")
{
    SuperSpace odd{{{"eps", 1}}};
    auto o = omega_algebra(odd);
    auto rs = complete(o.algebra, 8);
    CHECK(squares_to_zero(o, rs));
    const auto& p = o.algebra;
    CHECK(!p.generators()[p.at("deps")].degree.odd());
    auto de = p.gen("deps");
    CHECK(!rs.normal_form(de * de * de).is_zero());

    auto ox = omega_algebra(line());
    auto rx = complete(ox.algebra, 8);
    CHECK(squares_to_zero(ox, rx));
    CHECK(rx.normal_form(ox.algebra.gen("dx") * ox.algebra.gen("dx")).is_zero());

    auto ot = omega_algebra(torus_line());
    CHECK(squares_to_zero(ot, complete(ot.algebra, 8)));

    for (const auto& s : {odd, line(), line_odd()}) {
        auto c = de_rham_complex(s, 6);
        CHECK(verify_differential(c));
        CHECK(nonzero(cohomology(c)) == CohomologyTable{{{0, 0, 0}, 1}});
    }
}

TEST_CASE("Spencer complex on A^{1|0} and A^{1|1}")
{
    auto sp = spencer_complex(weyl_algebra(line()), {3, 5});
    CHECK(verify_differential(sp.complex));
    CHECK(sp.order_zero_dim == sp.a_dim);
    for (int n = 0; n <= 4; ++n)
        CHECK(spencer_gr_exact(sp, n));
    CHECK(acyclic(sp.complex));
    CHECK(staircase_contractibility(sp.complex, sp.filtration));

    auto so = spencer_complex(weyl_algebra(line_odd()), {2, 4});
    CHECK(verify_differential(so.complex));
    CHECK(so.order_zero_dim == so.a_dim);
    for (int n = 0; n <= 3; ++n)
        CHECK(spencer_gr_exact(so, n));
    CHECK(acyclic(so.complex));

    auto st = spencer_complex(weyl_algebra(torus_line()), {2, 3});
    CHECK(verify_differential(st.complex));
    CHECK(acyclic(st.complex));

    CHECK_THROWS_AS(spencer_complex(weyl_algebra(line()), {2, 0}), Error);
}

TEST_CASE("de Rham complex of D and the Berezinian")
{
    auto d1 = weyl_algebra(line());
    auto b1 = de_rham_of_D(d1, {1}, 3);
    CHECK(verify_differential(b1.complex));
    auto r1 = berezinian_check(d1, 3);
    CHECK(r1.stable);
    REQUIRE(r1.degree);
    CHECK(*r1.degree == Degree{1, 0, 0});

    auto d2 = weyl_algebra(line_odd());
    auto r2 = berezinian_check(d2, 3);
    CHECK(r2.stable);
    REQUIRE(r2.degree);
    CHECK(*r2.degree == Degree{1, -1, 0});

    // Blocks of non-positive weight on the even line carry no cohomology.
    CHECK(nonzero(cohomology(de_rham_of_D(d1, {0}, 4).complex)).empty());
    CHECK(nonzero(cohomology(de_rham_of_D(d1, {-2}, 4).complex)).empty());
}

TEST_CASE("Morita for odd variables")
{
    for (int q = 0; q <= 2; ++q) {
        auto r = morita_report(q);
        const std::size_t m = std::size_t{1} << q;
        CHECK(r.dim == m * m);
        CHECK(r.center_dim == 1);
        CHECK(r.super_center_dim == 1);
        CHECK(r.module_dim == m);
        CHECK(r.image_dim == m * m);
        CHECK(r.relations_hold);
        CHECK(morita_check(q));
    }
    CHECK_THROWS_AS(morita_report(4), Error);
}

TEST_CASE("Koszul complex of the moment map")
{
    LieSuperalgebra line_even({{"x", 0}});
    LieSuperalgebra line_odd_g({{"x", 1}});
    for (const auto& g : {line_even, sl11(), line_odd_g}) {
        auto c = koszul_moment_complex(g, 5);
        CHECK(verify_differential(c));
        CHECK(nonzero(cohomology(c)) == CohomologyTable{{{0, 0, 0}, 1}});
    }
}
