#include "doctest.h"
#include "superkoszul/ce.hpp"
#include "superkoszul/error.hpp"
#include "superkoszul/koszul.hpp"

using namespace superkoszul;

namespace {

const Degree eps_degree{-1, 0, 1};

// Reduced cohomology: everything except a single k in degree 0.
bool reduced_acyclic(const ComplexWindow& c)
{
    return cohomology(c) == CohomologyTable{{{0, 0, 0}, 1}};
}

FilteredComplex point(int level)
{
    FilteredComplex v;
    v.complex = ComplexWindow(0, 0, true, true);
    v.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"x", {}}}));
    v.level[0] = {level};
    return v;
}

// k² in degree 0 with F_{-1} = 0 ⊂ F_0 = ⟨a⟩ ⊂ F_1 = k².
FilteredComplex two_step()
{
    FilteredComplex v;
    v.complex = ComplexWindow(0, 0, true, true);
    v.complex.set_space(0, GradedSpace({{"a", {}}, {"b", {}}}));
    v.level[0] = {0, 1};
    return v;
}

// a → b isomorphism with b one filtration step below a.
FilteredComplex filtered_iso()
{
    FilteredComplex v;
    v.complex = ComplexWindow(0, 1, true, true);
    v.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"a", {}}}));
    v.complex.set_space(1, GradedSpace(std::vector<BasisVector>{BasisVector{"b", {1, 0, 0}}}));
    GradedMap d(v.complex.space(0), v.complex.space(1), {1, 0, 0});
    d.add(0, 0, 1);
    v.complex.set_differential(0, d);
    v.level[0] = {1};
    v.level[1] = {0};
    return v;
}

std::map<int, int> dims_by_h(const ComplexWindow& c)
{
    std::map<int, int> out;
    for (int n = c.lo(); n <= c.hi(); ++n)
        for (const auto& b : c.space(n).basis())
            ++out[b.degree.h];
    return out;
}

}  // namespace

TEST_CASE("Rees of a point")
{
    auto r = rees(point(0), 5);
    CHECK(dims_by_h(r) == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
    auto m = rees_module(point(0), 5);
    CHECK(m.h_action.at(0).entries().size() == 5);
}

TEST_CASE("Rees specializations recover V and gr V")
{
    for (const auto& v : {two_step(), filtered_iso(), odd_line_forms_filtered(4)}) {
        const int top = v.max_level();
        auto r = rees(v, top);
        auto tr = cohomology(r);
        auto tv = cohomology(v.complex);
        // h = 1: the top Rees degree is V itself.
        std::map<std::pair<int, int>, int> top_dims, v_dims;
        for (const auto& [d, k] : tr)
            if (d.h == top)
                top_dims[{d.coh, d.s}] += k;
        for (const auto& [d, k] : tv)
            v_dims[{d.coh, d.s}] += k;
        CHECK(top_dims == v_dims);
        // h = 0: Rees/h·Rees has the dimensions of gr V.
        auto gr = associated_graded(v);
        std::map<Degree, int> quotient, graded;
        for (int n = r.lo(); n <= r.hi(); ++n)
            for (const auto& b : r.space(n).basis())
                if (b.name.rfind("(h", 0) != 0)
                    ++quotient[b.degree];
        for (int n = gr.lo(); n <= gr.hi(); ++n)
            for (const auto& b : gr.space(n).basis())
                ++graded[b.degree];
        CHECK(quotient == graded);
    }
}

TEST_CASE("Rees of the odd-line forms is k[h, v]/hv")
{
    const int n = 5;
    auto r = rees(odd_line_forms_filtered(n), n);
    CohomologyTable expected;
    for (int p = 0; p <= n; ++p)
        expected[{0, 0, p}] = 1;
    for (int k = 1; k <= n; ++k)
        expected[{k, k, -k}] = 1;
    CHECK(cohomology(r) == expected);
}

TEST_CASE("coRees dimensions")
{
    auto v = two_step();
    auto c = corees(v, -2, 2);
    CHECK(dims_by_h(c) == std::map<int, int>{{-2, 2}, {-1, 2}, {0, 1}});
    auto trivial = point(0);
    CHECK(dims_by_h(corees(trivial, 0, 3)).empty());
    // Far below the filtration the quotient is all of V.
    auto iso = filtered_iso();
    CHECK(dims_by_h(corees(iso, -3, -3)) == std::map<int, int>{{-3, 2}});
}

TEST_CASE("cobar of the dual numbers is k[h]")
{
    auto c = dual_numbers(eps_degree);
    auto cob = reduced_cobar(c, {Slot::H, 6});
    CHECK(verify_differential(cob.complex));
    CohomologyTable expected;
    for (int p = 0; p <= 6; ++p)
        expected[{0, 0, p}] = 1;
    CHECK(cohomology(cob.complex) == expected);
    CHECK(cob.words.at(0).size() == 7);
}

TEST_CASE("cobar of k is k")
{
    auto cob = reduced_cobar(trivial_coalgebra(), {Slot::H, 4});
    CHECK(cohomology(cob.complex) == CohomologyTable{{{0, 0, 0}, 1}});
}

TEST_CASE("cobar of C(sl11) recovers U(sl11) in degree 0")
{
    const int n = 6;
    auto c = chain_coalgebra(sl11(), n, {1, 1, 2});
    auto cob = reduced_cobar(c, {Slot::H, n});
    CHECK(verify_differential(cob.complex));
    auto t = cohomology(cob.complex);
    // PBW monomials f^a h^b e^c with a, c ≤ 1 counted by weight a + 2b + c.
    std::map<int, int> pbw;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; 2 * b <= n; ++b)
            for (int e = 0; e <= 1; ++e)
                if (a + 2 * b + e <= n)
                    ++pbw[a + 2 * b + e];
    std::map<int, int> h0;
    for (const auto& [d, k] : t) {
        CHECK(d.coh == 0);
        h0[d.h] += k;
    }
    CHECK(h0 == pbw);
}

TEST_CASE("cobar of the odd-line forms")
{
    const int n = 5;
    auto bare = reduced_cobar(odd_line_forms(n, false), {Slot::S, n});
    CHECK(verify_differential(bare.complex));
    // k[u, du]: u^k in (k, k), u^k du in (k + 2, k + 1).
    CohomologyTable expected;
    for (int k = 0; k <= n; ++k)
        expected[{k, k, 0}] = 1;
    for (int k = 0; k + 1 <= n; ++k)
        expected[{k + 2, k + 1, 0}] = 1;
    CHECK(cohomology(bare.complex) == expected);
    auto full = reduced_cobar(odd_line_forms(n, true), {Slot::S, n});
    CHECK(verify_differential(full.complex));
    CHECK(reduced_acyclic(full.complex));
}

TEST_CASE("odd-line forms are a dg coalgebra")
{
    auto c = odd_line_forms(5, true);
    CHECK(coassociative(c));
    CHECK(counit_laws(c));
    CHECK(is_coderivation(c));
}

TEST_CASE("twisted tensor products are acyclic")
{
    std::vector<std::pair<ConilpotentCoalgebra, Truncation>> corpus = {
        {trivial_coalgebra(), {Slot::H, 3}},
        {dual_numbers(eps_degree), {Slot::H, 6}},
        {chain_coalgebra(LieSuperalgebra({{"x", 1}}), 6, {1}), {Slot::H, 6}},
        {chain_coalgebra(sl11(), 5, {1, 1, 2}), {Slot::H, 5}},
        {odd_line_forms(4, false), {Slot::S, 4}},
        {odd_line_forms(4, true), {Slot::S, 4}},
    };
    for (const auto& [c, t] : corpus) {
        auto k = twisted_tensor(c, t);
        CHECK(verify_differential(k));
        CHECK(reduced_acyclic(k));
    }
}

TEST_CASE("conilpotency failure")
{
    // A grouplike element g with Δg = g⊗g is not conilpotent.
    ConilpotentCoalgebra c;
    c.space = GradedSpace({{"1", {}}, {"g", {0, 0, 1}}});
    c.unit = 0;
    c.coproduct = {{{0, 0, 1}}, {{1, 1, 1}}};
    CHECK_THROWS_AS(reduced_cobar(c, {Slot::H, 3}), Error);
}

TEST_CASE("counit cones are staircase contractible")
{
    HModule k;
    k.complex = ComplexWindow(0, 0, true, true);
    k.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}}));
    k.h_action.emplace(0, GradedMap(k.complex.space(0), k.complex.space(0), {0, 0, 1}));
    std::vector<HModule> corpus = {k, rees_module(point(0), 6), rees_module(two_step(), 6), rees_module(filtered_iso(), 6), rees_module(odd_line_forms_filtered(3), 4)};
    for (const auto& n : corpus) {
        auto w = counit_cone(n, 4);
        CHECK(verify_differential(w.cone));
        CHECK(cohomology(w.cone).empty());
        CHECK(staircase_contractibility(w.cone, w.stages));
    }
}

TEST_CASE("unit cones are acyclic row by row")
{
    auto single = [](const std::string& name, const Degree& d) {
        DualNumbersComodule m;
        m.complex = ComplexWindow(d.coh, d.coh, true, true);
        m.complex.set_space(d.coh, GradedSpace(std::vector<BasisVector>{BasisVector{name, d}}));
        return m;
    };
    DualNumbersComodule regular;
    regular.complex = ComplexWindow(-1, 0, true, true);
    regular.complex.set_space(-1, GradedSpace(std::vector<BasisVector>{BasisVector{"eps", eps_degree}}));
    regular.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}}));
    GradedMap delta(regular.complex.space(-1), regular.complex.space(0), {1, 0, -1});
    delta.add(0, 0, 1);
    regular.delta.emplace(-1, delta);
    for (const auto& m : {single("1", {}), single("x", {1, 1, 2}), regular}) {
        CHECK(is_comodule(m));
        auto w = unit_cone(m, 5);
        CHECK(verify_differential(w.cone));
        CHECK(cohomology(w.cone).empty());
        CHECK(staircase_contractibility(w.cone, w.stages));
    }
}

TEST_CASE("relative cobar with trivial coaction is A ⊗ k[h]")
{
    auto u = universal_enveloping(sl11());
    std::vector<Element> zero(u.size());
    auto dg = relative_cobar(u, zero, 8);
    auto rs = complete(dg.algebra, 8);
    REQUIRE(rs.is_complete());
    CHECK(is_central(dg.algebra.gen(cobar_eps), rs));
    CHECK(squares_to_zero(dg, rs));
    auto base = hilbert(complete(u, 8), Grading::WordLength, 6);
    auto ext = hilbert(rs, Grading::WordLength, 6);
    for (int n = 0; n <= 6; ++n) {
        long expect = 0;
        for (int k = 0; k <= n; ++k)
            expect += base[k];
        CHECK(ext[n] == expect);
    }
}

TEST_CASE("relative cobar with a nontrivial coaction")
{
    Presentation a;
    a.add_generator({"x", {0, 0, 1}, 0, 0});
    a.add_generator({"y", {1, 0, 0}, 0, 0});
    a.add_relation("x*y - y*x");
    a.add_relation("y*y");
    auto dg = relative_cobar(a, {a.gen("y"), Element()}, 6);
    auto rs = complete(dg.algebra, 6);
    CHECK(squares_to_zero(dg, rs));

    Presentation bad;
    bad.add_generator({"x", {0, 0, 1}, 0, 0});
    bad.add_generator({"y", {1, 0, 0}, 0, 0});
    bad.add_relation("x*x");
    bad.add_relation("x*y - y*x");
    bad.add_relation("y*y");
    CHECK_THROWS_AS(relative_cobar(bad, {bad.gen("y"), Element()}, 6), Error);
}

TEST_CASE("relative cobar of k over k is k")
{
    Presentation k;
    auto dg = relative_cobar(k, {}, 4);
    auto rs = complete(dg.algebra, 4);
    CHECK(squares_to_zero(dg, rs));
    CHECK(hilbert(rs, Grading::WordLength, 3) == std::map<int, long>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("Rees of U(sl11) with the PBW filtration matches the Rees algebra")
{
    const int n = 5;
    auto u = universal_enveloping(sl11());
    auto rs = complete(u, 2 * n + 2);
    FilteredComplex v;
    v.complex = ComplexWindow(0, 0, true, true);
    std::vector<BasisVector> basis;
    for (int k = 0; k <= n; ++k)
        for (const auto& w : rs.normal_words(k)) {
            basis.push_back({u.word_name(w), {}});
            v.level[0].push_back(k);
        }
    v.complex.set_space(0, GradedSpace(basis));
    auto r = rees(v, n);
    std::map<int, long> dims;
    for (const auto& b : r.space(0).basis())
        ++dims[b.degree.h];
    auto rr = complete(rees_algebra(u), 2 * n + 2);
    auto ref = hilbert(rr, Grading::H, n);
    for (int p = 0; p <= n; ++p)
        CHECK(dims[p] == ref[p]);
}
