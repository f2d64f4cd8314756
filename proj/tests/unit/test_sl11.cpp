#include "doctest.h"
#include "superkoszul/ce.hpp"
#include "superkoszul/error.hpp"
#include "superkoszul/sl11.hpp"

using namespace superkoszul;

TEST_CASE("anchor of sl(1|1) on the torus line")
{
    auto a = build_anchor();
    auto rs = complete(a.target.presentation, 8);
    CHECK(a.images.size() == 3);
    CHECK(anchor_violations(a, rs).empty());

    // A wrong image for h breaks the [e,f] pair and nothing unrelated.
    auto bad = a;
    bad.images[a.source.index_of("h")] = a.target.presentation.parse("t*d_t");
    auto v = anchor_violations(bad, rs);
    CHECK(!v.empty());
    for (const auto& [x, y] : v)
        CHECK((x == "e" || x == "f" || y == "e" || y == "f"));
}

TEST_CASE("T-invariant operators")
{
    auto t = t_invariant_algebra();
    auto r = t_invariant_report(t, 3);
    CHECK(r.relations_vanish);
    CHECK(r.alpha_f_commutator);
    CHECK(r.e_alpha_zero);
    CHECK(r.e_equals_alpha_h);
    CHECK(r.image_inside);
    for (int k = 0; k <= 3; ++k)
        CHECK(r.by_h_power.at(k) == 4);
    for (int n = 0; n <= 3; ++n) {
        CHECK(r.invariant_dim.at(n) == 4 * n + 2);
        CHECK(r.image_rank.at(n) == 4 * n + 2);
        CHECK(r.abstract_dim.at(n) == 4 * n + 2);
    }
    CHECK(r.pass());
}

TEST_CASE("moment map symbols and the quotient comparison")
{
    auto t = t_invariant_algebra();
    auto m = moment_map_check(t, 5);
    CHECK(m.gr_commutative);
    CHECK(m.mu_matches);
    CHECK(m.mu_images.size() == 3);
    CHECK(m.quotient_dims == m.gr_dims);
    // k[h] ⊗ Λ[α, f] with weights 2, −1, 1.
    for (int w = -1; w <= 5; ++w) {
        long n = 0;
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                n += (w + a - b) >= 0 && (w + a - b) % 2 == 0;
        CHECK(m.gr_dims.at(w) == n);
    }
    CHECK(m.pass());
}

TEST_CASE("periodic resolution")
{
    auto r = periodic_resolution(5);
    CHECK(r.generators[0] == std::vector<Degree>{{0, 0, 0}, {0, 1, -1}});
    CHECK(r.generators[1] == std::vector<Degree>{{0, 2, 0}, {0, 1, 1}});
    CHECK(r.generators[2] == std::vector<Degree>{{0, 3, 1}, {0, 2, 2}});
    CHECK(augmentation_composite_in_weyl(r, t_invariant_algebra()));
    CHECK_THROWS_AS(periodic_resolution(1), Error);

    auto c = resolution_window(r, 4);
    CHECK(verify_differential(c));
    for (int n : c.interior())
        for (const auto& [d, k] : cohomology(c, n))
            CHECK(k == 0);
}

TEST_CASE("Weyl monad against k[h,u]/(hu) tensor a Clifford algebra")
{
    auto w = weyl_monad(3, 4);
    CHECK(w.table.size() > 0);
    CHECK(shear(w.table) == w.oracle);
    CHECK(w.matches);
    CHECK(w.h_central);
    CHECK(w.hu_zero);
    CHECK(w.h_torsion_free_in_degree_zero);
    CHECK(w.closed_under_composition);
    // u sits at (1,−1,−1) before the shear.
    CHECK(w.table.count({1, -1, -1}) == 1);
    CHECK(w.pass());
    CHECK_THROWS_AS(weyl_monad(0, 4), Error);
}

TEST_CASE("weight specialization at nonzero weight")
{
    for (int l : {1, -2}) {
        auto r = weight_specialize(Rational(l));
        CHECK(r.dim == 4);
        CHECK(r.center_dim == 1);
        CHECK(r.super_center_dim == 1);
        CHECK(r.module_dim == 2);
        CHECK(r.image_dim == 4);
        CHECK(r.relations_hold);
        CHECK(r.morita_iso);
        CHECK(r.pass());
    }
}

TEST_CASE("weight specialization at zero matches Lie algebra cohomology")
{
    const int n = 4;
    auto r = weight_specialize(Rational(0), n);
    CohomologyTable expected;
    expected[{0, 0, 0}] = 1;
    for (int k = 1; k <= n; ++k) {
        expected[{k, -k, 0}] = 1;
        expected[{k, k, 0}] = 1;
    }
    CHECK(r.ce_table == expected);
    CHECK(shear(r.classical_plus) == expected);
    CHECK(shear(r.classical_minus) == expected);
    CHECK(r.matches_ce);
    CHECK(r.u_sigma_zero);
    CHECK(r.sigma_nonzero);
    for (int m = -n; m <= n; ++m)
        CHECK(shear(r.complete_plus).count({m, m, 0}) == 1);
    CHECK(r.pass());
}
