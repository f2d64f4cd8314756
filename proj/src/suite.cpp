#include "superkoszul/suite.hpp"

#include "superkoszul/ce.hpp"
#include "superkoszul/error.hpp"
#include "superkoszul/koszul.hpp"
#include "superkoszul/parallel.hpp"
#include "superkoszul/sl11.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <tuple>

namespace superkoszul {

namespace {

CheckResult make(const std::string& name, bool ok, const std::string& window = "")
{
    CheckResult r;
    r.name = name;
    r.status = ok ? Status::Pass : Status::Fail;
    r.window = window;
    return r;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

CohomologyTable nonzero(const CohomologyTable& t)
{
    CohomologyTable out;
    for (const auto& [d, n] : t)
        if (n != 0)
            out[d] = n;
    return out;
}

std::map<int, long> by_coh(const CohomologyTable& t)
{
    std::map<int, long> out;
    for (const auto& [d, n] : t)
        out[d.coh] += n;
    return out;
}

GradedSpace random_space(std::mt19937& rng, const std::string& prefix)
{
    std::uniform_int_distribution<int> dim(1, 3), deg(-2, 2), hdeg(-1, 1);
    std::vector<BasisVector> basis;
    const int n = dim(rng);
    for (int i = 0; i < n; ++i)
        basis.push_back({prefix + std::to_string(i), {deg(rng), deg(rng), hdeg(rng)}});
    return GradedSpace(basis);
}

GradedMap tensor_maps(const GradedMap& f, const GradedMap& g)
{
    GradedMap out(tensor(f.source(), g.source()), tensor(f.target(), g.target()), f.degree() + g.degree());
    const int gs = static_cast<int>(g.source().dim());
    const int gt = static_cast<int>(g.target().dim());
    for (const auto& [fa, fv] : f.entries())
        for (const auto& [ga, gv] : g.entries())
            out.add(fa.first * gt + ga.first, fa.second * gs + ga.second, fv * gv);
    return out;
}

std::vector<std::pair<std::string, LieSuperalgebra>> small_lie_corpus()
{
    std::vector<std::pair<std::string, LieSuperalgebra>> out;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n) {
            if (m + n == 0)
                continue;
            std::vector<std::pair<int, int>> shape;
            if (m)
                shape.push_back({0, m});
            if (n)
                shape.push_back({1, n});
            const std::string tag = "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
            out.emplace_back("gl" + tag, gl(shape));
            if (m + n >= 2)
                out.emplace_back("sl" + tag, sl(shape));
        }
    return out;
}

}  // namespace

Report run_checks(const std::vector<NamedCheck>& checks, int jobs)
{
    set_jobs(jobs);
    Report r;
    r.checks.resize(checks.size());
    parallel_for(checks.size(), [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult c;
        try {
            c = checks[i].run();
        } catch (const Error& e) {
            c = make(checks[i].name, false);
            if (e.kind() == ErrorKind::WindowTooSmall || e.kind() == ErrorKind::BoundTooSmall)
                c.status = Status::UnreliableWindow;
            c.notes.push_back(e.what());
        } catch (const std::exception& e) {
            c = make(checks[i].name, false);
            c.notes.push_back(e.what());
        }
        c.name = checks[i].name;
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.checks[i] = std::move(c);
    });
    return r;
}

std::vector<NamedCheck> sign_checks()
{
    return {{"signs: Koszul sign rule on random spaces", [] {
                 std::mt19937 rng(20240611);
                 std::uniform_int_distribution<int> deg(-4, 4);
                 long bilinear = 0, involution = 0, hexagon = 0;
                 const int trials = 100;
                 for (int t = 0; t < trials; ++t) {
                     Degree a{deg(rng), deg(rng), deg(rng)}, b{deg(rng), deg(rng), deg(rng)}, c{deg(rng), deg(rng), deg(rng)};
                     bilinear += koszul_sign(a + b, c) == koszul_sign(a, c) * koszul_sign(b, c) && koszul_sign(a, b) == koszul_sign(b, a);
                     auto u = random_space(rng, "u");
                     auto v = random_space(rng, "v");
                     auto w = random_space(rng, "w");
                     auto suv = braiding(u, v);
                     involution += compose(braiding(v, u), suv) == identity_map(tensor(u, v));
                     auto l1 = braiding(u, tensor(v, w));
                     auto r1 = compose(tensor_maps(identity_map(v), braiding(u, w)), tensor_maps(suv, identity_map(w)));
                     auto l2 = braiding(tensor(u, v), w);
                     auto r2 = compose(tensor_maps(braiding(u, w), identity_map(v)), tensor_maps(identity_map(u), braiding(v, w)));
                     hexagon += l1.entries() == r1.entries() && l2.entries() == r2.entries();
                 }
                 auto r = make("", bilinear == trials && involution == trials && hexagon == trials, "100 random triples");
                 r.tables.push_back({"passing trials", {"property", "passed", "of"},
                                     {{"bilinearity", std::to_string(bilinear), std::to_string(trials)},
                                      {"involution", std::to_string(involution), std::to_string(trials)},
                                      {"hexagon", std::to_string(hexagon), std::to_string(trials)}}});
                 return r;
             }}};
}

std::vector<NamedCheck> lie_checks()
{
    return {{"lie: Jacobi and PBW for gl(m|n), sl(m|n), m+n <= 3", [] {
        const int pbw_degree = 5;
        Table t{"small Lie superalgebras", {"algebra", "dim", "jacobi violations", "pbw"}, {}};
        bool ok = true;
        for (const auto& [name, g] : small_lie_corpus()) {
            const auto v = jacobi_check(g);
            const bool pbw = pbw_check(g, pbw_degree);
            ok = ok && v.empty() && pbw;
            t.rows.push_back({name, std::to_string(g.dim()), std::to_string(v.size()), yes(pbw)});
        }
        auto r = make("", ok, "PBW to degree 5");
        r.tables.push_back(t);
        return r;
    }}};
}

std::vector<NamedCheck> ce_checks(const LieSuperalgebra& g, const std::string& label, int max_degree, bool xy_oracle)
{
    return {{"ce: cohomology of " + label + " with trivial coefficients", [g, max_degree, xy_oracle] {
        const ComplexWindow c = cochain_complex(g, trivial_module(g), max_degree + 1);
        const bool d2 = verify_differential(c);
        CohomologyTable t;
        for (const auto& [d, n] : nonzero(cohomology(c)))
            if (d.coh <= max_degree)
                t[d] = n;
        auto dims = by_coh(t);
        for (int n = 0; n <= max_degree; ++n)
            dims.emplace(n, 0);
        bool ok = d2;
        if (xy_oracle) {
            // Monomials x^a y^b with ab = 0 in total degree n.
            std::map<int, long> oracle;
            for (int n = 0; n <= max_degree; ++n)
                for (int a = 0; a <= n; ++a)
                    oracle[n] += a == 0 || a == n;
            ok = ok && dims == oracle;
        }
        auto r = make("", ok, "coh <= " + std::to_string(max_degree));
        r.tables.push_back(series_table("H^n dims", "n", dims));
        r.tables.push_back(cohomology_table("H by degree", t));
        return r;
    }}};
}

std::vector<NamedCheck> curvature_checks()
{
    return {{"curved algebra: curvature is central", [] {
        Table t{"curvature", {"algebra", "complete", "central"}, {}};
        bool ok = true;
        const std::vector<std::pair<std::string, LieSuperalgebra>> algebras = {{"sl(1|1)", sl11()}, {"gl(1|1)", gl({{0, 1}, {1, 1}})}};
        for (const auto& [name, g] : algebras) {
            const CurvedAlgebra b = curved_B(g);
            const RewriteSystem rs = complete(b.presentation, 8);
            const bool central = is_central(b.curvature, rs);
            // Word-by-word check on every normal word up to length 6.
            bool words = true;
            for (int n = 0; n <= 6; ++n)
                for (const auto& w : rs.normal_words(n))
                    words = words && rs.normal_form(supercommutator(b.curvature, Element::word(w), b.presentation)).is_zero();
            ok = ok && rs.is_complete() && central && words;
            t.rows.push_back({name, yes(rs.is_complete()), yes(central && words)});
        }
        auto r = make("", ok, "word length <= 6");
        r.tables.push_back(t);
        return r;
    }}};
}

std::vector<NamedCheck> cobar_checks()
{
    std::vector<NamedCheck> out;
    out.push_back({"cobar: dual numbers", [] {
        const int n = 6;
        const auto cob = reduced_cobar(dual_numbers({-1, 0, 1}), {Slot::H, n});
        const auto t = nonzero(cohomology(cob.complex));
        CohomologyTable expected;
        for (int p = 0; p <= n; ++p)
            expected[{0, 0, p}] = 1;
        auto r = make("", verify_differential(cob.complex) && t == expected, "h <= 6");
        r.tables.push_back(cohomology_table("cobar cohomology", t));
        return r;
    }});
    out.push_back({"cobar: odd-line forms", [] {
        const int n = 5;
        const auto bare = reduced_cobar(odd_line_forms(n, false), {Slot::S, n});
        const auto full = reduced_cobar(odd_line_forms(n, true), {Slot::S, n});
        const auto tb = nonzero(cohomology(bare.complex));
        const auto tf = nonzero(cohomology(full.complex));
        // k[u, du] with u at (1,1) and du at (2,1).
        CohomologyTable expected;
        for (int k = 0; k <= n; ++k)
            expected[{k, k, 0}] = 1;
        for (int k = 0; k + 1 <= n; ++k)
            expected[{k + 2, k + 1, 0}] = 1;
        const bool ok = verify_differential(bare.complex) && verify_differential(full.complex) && tb == expected &&
                        tf == CohomologyTable{{{0, 0, 0}, 1}};
        auto r = make("", ok, "s <= 5");
        r.tables.push_back(cohomology_table("coalgebra cobar", tb));
        r.tables.push_back(cohomology_table("dg coalgebra cobar", tf));
        return r;
    }});
    out.push_back({"cobar: Rees of the filtered forms", [] {
        const int n = 5;
        const auto t = nonzero(cohomology(rees(odd_line_forms_filtered(n), n)));
        CohomologyTable expected;
        for (int p = 0; p <= n; ++p)
            expected[{0, 0, p}] = 1;
        for (int k = 1; k <= n; ++k)
            expected[{k, k, -k}] = 1;
        auto r = make("", t == expected, "s <= 5, h <= 5");
        r.tables.push_back(cohomology_table("Rees cohomology", t));

        // B = k[u, du] with du = d(u), F_{-1} = k[u]du ⊂ F_0 = B: reported only.
        FilteredComplex b;
        const int top = 2 * n + 2;
        b.complex = ComplexWindow(0, top, true, false);
        std::map<int, std::vector<BasisVector>> basis;
        std::map<int, std::vector<int>> level;
        for (int k = 0; k <= n; ++k) {
            basis[k].push_back({"u^" + std::to_string(k), {k, k, 0}});
            level[k].push_back(0);
        }
        for (int k = 0; k + 1 <= n; ++k) {
            basis[k + 2].push_back({"u^" + std::to_string(k) + "du", {k + 2, k + 1, 0}});
            level[k + 2].push_back(-1);
        }
        for (int c = 0; c <= top; ++c) {
            b.complex.set_space(c, GradedSpace(basis[c]));
            b.level[c] = level[c];
        }
        for (int k = 1; k <= n; ++k) {
            // d u^k = k u^{k−1} du lands in degree k + 1.
            const auto& src = b.complex.space(k);
            const auto& dst = b.complex.space(k + 1);
            GradedMap d(src, dst, {1, 0, 0});
            const int j = dst.index_of("u^" + std::to_string(k - 1) + "du");
            if (j >= 0)
                d.add(j, src.index_of("u^" + std::to_string(k)), k);
            b.complex.set_differential(k, d);
        }
        r.tables.push_back(cohomology_table("one-step Rees of B (informational)", nonzero(cohomology(rees(b, n)))));
        return r;
    }});
    return out;
}

std::vector<NamedCheck> twisted_tensor_checks()
{
    std::vector<NamedCheck> out;
    out.push_back({"twisted tensor: acyclicity", [] {
        const Degree eps{-1, 0, 1};
        const std::vector<std::tuple<std::string, ConilpotentCoalgebra, Truncation>> corpus = {
            {"k", trivial_coalgebra(), {Slot::H, 3}},
            {"k[eps]", dual_numbers(eps), {Slot::H, 6}},
            {"C(k^{0|1})", chain_coalgebra(LieSuperalgebra({{"x", 1}}), 6, {1}), {Slot::H, 6}},
            {"C(sl(1|1))", chain_coalgebra(sl11(), 5, {1, 1, 2}), {Slot::H, 5}},
            {"odd-line forms", odd_line_forms(4, false), {Slot::S, 4}},
            {"odd-line forms with d", odd_line_forms(4, true), {Slot::S, 4}},
        };
        Table t{"reduced cohomology", {"coalgebra", "d^2 = 0", "acyclic"}, {}};
        bool ok = true;
        for (const auto& [name, c, tr] : corpus) {
            const auto k = twisted_tensor(c, tr);
            const bool d2 = verify_differential(k);
            const bool acyclic = nonzero(cohomology(k)) == CohomologyTable{{{0, 0, 0}, 1}};
            ok = ok && d2 && acyclic;
            t.rows.push_back({name, yes(d2), yes(acyclic)});
        }
        auto r = make("", ok, "pinned per coalgebra");
        r.tables.push_back(t);
        return r;
    }});
    out.push_back({"twisted tensor: unit and counit cones", [] {
        Table t{"cones", {"cone", "acyclic", "staircase"}, {}};
        bool ok = true;
        auto record = [&](const std::string& name, const ConeWitness& w) {
            const bool acyclic = verify_differential(w.cone) && nonzero(cohomology(w.cone)).empty();
            const bool stairs = staircase_contractibility(w.cone, w.stages);
            ok = ok && acyclic && stairs;
            t.rows.push_back({name, yes(acyclic), yes(stairs)});
        };
        HModule k;
        k.complex = ComplexWindow(0, 0, true, true);
        k.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}}));
        k.h_action.emplace(0, GradedMap(k.complex.space(0), k.complex.space(0), {0, 0, 1}));
        record("counit, N = k", counit_cone(k, 4));
        record("counit, N = Rees of forms", counit_cone(rees_module(odd_line_forms_filtered(3), 4), 4));

        DualNumbersComodule one;
        one.complex = ComplexWindow(0, 0, true, true);
        one.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}}));
        record("unit, M = k", unit_cone(one, 5));
        DualNumbersComodule regular;
        regular.complex = ComplexWindow(-1, 0, true, true);
        regular.complex.set_space(-1, GradedSpace(std::vector<BasisVector>{BasisVector{"eps", {-1, 0, 1}}}));
        regular.complex.set_space(0, GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}}));
        GradedMap delta(regular.complex.space(-1), regular.complex.space(0), {1, 0, -1});
        delta.add(0, 0, 1);
        regular.delta.emplace(-1, delta);
        ok = ok && is_comodule(regular);
        record("unit, M = k[eps]", unit_cone(regular, 5));
        auto r = make("", ok, "h <= 5");
        r.tables.push_back(t);
        return r;
    }});
    return out;
}

std::vector<std::pair<std::string, SuperSpace>> default_spencer_spaces()
{
    return {{"A^{1|0}", SuperSpace{{{"x", 0}}}}, {"A^{1|1}", SuperSpace{{{"x", 0}, {"eps", 1}}}}};
}

std::vector<NamedCheck> spencer_checks(const std::vector<std::pair<std::string, SuperSpace>>& spaces)
{
    std::vector<NamedCheck> out;
    for (const auto& [label, space] : spaces)
        out.push_back({"spencer: " + label, [label, space] {
            // Larger spaces get a smaller pinned window.
            const int odd = static_cast<int>(std::count_if(space.coordinates.begin(), space.coordinates.end(), [](const Coordinate& c) { return c.s % 2 != 0; }));
            const int dim = static_cast<int>(space.coordinates.size());
            const SpencerWindow w = (dim <= 1 && odd == 0) ? SpencerWindow{3, 5} : SpencerWindow{2, 4};
            const int top = w.max_order - 1;
            const SpencerComplex sp = spencer_complex(weyl_algebra(space), w);
            Table t{"gr_n exact", {"n", "exact"}, {}};
            bool ok = verify_differential(sp.complex) && sp.order_zero_dim == sp.a_dim;
            for (int n = 1; n <= top; ++n) {
                const bool e = spencer_gr_exact(sp, n);
                ok = ok && e;
                t.rows.push_back({std::to_string(n), yes(e)});
            }
            const bool acyclic = nonzero(cohomology(sp.complex)).empty();
            ok = ok && acyclic;
            auto r = make("", ok, "coordinate degree <= " + std::to_string(w.max_coordinate_degree) + ", n <= " + std::to_string(w.max_order));
            r.tables.push_back(t);
            r.tables.push_back({"augmented complex", {"property", "value"}, {{"acyclic", yes(acyclic)}, {"dim A in window", std::to_string(sp.a_dim)}}});
            return r;
        }});
    return out;
}

std::vector<NamedCheck> morita_checks(const std::vector<int>& qs)
{
    return {{"morita: odd Weyl algebras", [qs] {
        Table t{"D for k^{0|q}", {"q", "dim", "center", "super center", "module", "image"}, {}};
        bool ok = true;
        for (int q : qs) {
            const MoritaReport m = morita_report(q);
            ok = ok && m.pass(q);
            t.rows.push_back({std::to_string(q), std::to_string(m.dim), std::to_string(m.center_dim), std::to_string(m.super_center_dim),
                              std::to_string(m.module_dim), std::to_string(m.image_dim)});
        }
        auto r = make("", ok);
        r.tables.push_back(t);
        return r;
    }}};
}

std::vector<NamedCheck> koszul_moment_checks(const LieSuperalgebra& g, const std::string& label, int max_degree)
{
    return {{"koszul moment complex: " + label, [g, max_degree] {
        const ComplexWindow c = koszul_moment_complex(g, max_degree);
        const auto t = nonzero(cohomology(c));
        auto r = make("", verify_differential(c) && t == CohomologyTable{{{0, 0, 0}, 1}}, "polynomial degree <= " + std::to_string(max_degree));
        r.tables.push_back(cohomology_table("cohomology", t));
        return r;
    }}};
}

std::vector<NamedCheck> sl11_checks(const SuiteOptions& o)
{
    std::vector<NamedCheck> out;
    out.push_back({"sl11: anchor", [] {
        const AnchorMap a = build_anchor();
        const RewriteSystem rs = complete(a.target.presentation, 8);
        const auto v = anchor_violations(a, rs);
        const Presentation& p = a.target.presentation;
        const Element& e = a.images[a.source.index_of("e")];
        const Element& f = a.images[a.source.index_of("f")];
        const Element& h = a.images[a.source.index_of("h")];
        const bool ef = rs.normal_form(e * f + f * e - h).is_zero();
        auto r = make("", v.empty() && ef, "all basis pairs");
        Table t{"anchor images", {"x", "rho(x)"}, {}};
        for (std::size_t i = 0; i < a.images.size(); ++i)
            t.rows.push_back({a.source.basis()[i].name, p.to_string(rs.normal_form(a.images[i]))});
        r.tables.push_back(t);
        r.tables.push_back({"Lie map", {"pairs checked", "violations", "[rho e, rho f] = rho h"}, {{"9", std::to_string(v.size()), yes(ef)}}});
        return r;
    }});
    out.push_back({"sl11: T-invariant operators", [] {
        const int n = 4;
        const TInvariantAlgebra ta = t_invariant_algebra();
        const TInvariantReport t = t_invariant_report(ta, n);
        auto r = make("", t.pass(), "order <= 4");
        r.tables.push_back({"relations",
                            {"relations vanish", "[alpha, f] = 1", "e alpha = alpha e = 0", "e = alpha h"},
                            {{yes(t.relations_vanish), yes(t.alpha_f_commutator), yes(t.e_alpha_zero), yes(t.e_equals_alpha_h)}}});
        Table d{"invariants by order", {"order", "abstract", "invariant", "image rank"}, {}};
        for (const auto& [k, v] : t.invariant_dim)
            d.rows.push_back({std::to_string(k), std::to_string(t.abstract_dim.at(k)), std::to_string(v), std::to_string(t.image_rank.at(k))});
        r.tables.push_back(d);
        std::map<int, long> hp;
        for (const auto& [k, v] : t.by_h_power)
            hp[k] = v;
        r.tables.push_back(series_table("normal words by power of h", "h power", hp));
        return r;
    }});
    out.push_back({"sl11: moment map", [] {
        const MomentMapReport m = moment_map_check(t_invariant_algebra(), 6);
        auto r = make("", m.pass(), "w <= 6");
        Table s{"moment map symbols", {"x", "mu(x)"}, {}};
        const char* names[] = {"e", "f", "h"};
        for (std::size_t i = 0; i < m.mu_images.size(); ++i)
            s.rows.push_back({names[i], m.mu_images[i]});
        r.tables.push_back(s);
        Table d{"quotient vs gr dims", {"w", "O[alpha]/(e - alpha h)", "gr D^T", "rank"}, {}};
        for (const auto& [w, n] : m.gr_dims)
            d.rows.push_back({std::to_string(w), std::to_string(m.quotient_dims.at(w)), std::to_string(n), std::to_string(m.map_rank.at(w))});
        r.tables.push_back(d);
        r.tables.push_back({"gr commutative", {"value"}, {{yes(m.gr_commutative)}}});
        return r;
    }});
    out.push_back({"sl11: periodic resolution", [] {
        const int n_terms = 6, max_weight = 6;
        const ResolutionData res = periodic_resolution(n_terms);
        const bool weyl = augmentation_composite_in_weyl(res, t_invariant_algebra());
        const ComplexWindow c = resolution_window(res, max_weight);
        const bool exact = verify_differential(c) && nonzero(cohomology(c)).empty();
        auto r = make("", weyl && exact, "P_0..P_6, w <= 6");
        Table g{"generator degrees", {"k", "g_k0", "g_k1"}, {}};
        for (int k = 0; k <= n_terms; ++k)
            g.rows.push_back({std::to_string(k), to_string(res.generators[k][0]), to_string(res.generators[k][1])});
        r.tables.push_back(g);
        r.tables.push_back({"composites", {"in U and D^T", "augmentation in Weyl", "window exact"}, {{"yes", yes(weyl), yes(exact)}}});
        return r;
    }});
    const int hi = o.window_hi, lo = o.window_lo;
    out.push_back({"sl11: Weyl monad", [hi] {
        const int max_coh = std::max(1, std::min(hi, 6));
        const int max_w = std::max(2, std::min(hi, 8));
        const WeylMonadReport w = weyl_monad(max_coh, max_w);
        auto r = make("", w.pass(), "coh <= " + std::to_string(max_coh) + ", sheared w <= " + std::to_string(max_w));
        const CohomologyTable sheared = shear(w.table);
        std::set<Degree> keys;
        for (const auto& [d, n] : sheared)
            keys.insert(d);
        for (const auto& [d, n] : w.oracle)
            keys.insert(d);
        Table t{"Wbar dims", {"coh", "s", "w", "computed", "oracle"}, {}};
        for (const auto& d : keys)
            t.rows.push_back({std::to_string(d.coh), std::to_string(d.s), std::to_string(d.h), std::to_string(sheared.count(d) ? sheared.at(d) : 0),
                              std::to_string(w.oracle.count(d) ? w.oracle.at(d) : 0)});
        r.tables.push_back(t);
        r.tables.push_back(cohomology_table("raw Hom cohomology", w.table));
        r.tables.push_back({"products",
                            {"h central", "h H^>0 = 0", "h injective on H^0", "H^0 closed"},
                            {{yes(w.h_central), yes(w.hu_zero), yes(w.h_torsion_free_in_degree_zero), yes(w.closed_under_composition)}}});
        return r;
    }});
    if (o.verify_all) {
        out.push_back({"sl11: weight 1", [] {
            const SpecializationReport s = weight_specialize(Rational(1));
            auto r = make("", s.pass(), "finite");
            r.tables.push_back({"D^T/(h - 1)",
                                {"dim", "center", "super center", "module", "image", "relations", "iso to D of odd line"},
                                {{std::to_string(s.dim), std::to_string(s.center_dim), std::to_string(s.super_center_dim), std::to_string(s.module_dim),
                                  std::to_string(s.image_dim), yes(s.relations_hold), yes(s.morita_iso)}}});
            return r;
        }});
        out.push_back({"sl11: weight 0", [lo, hi] {
            const int max_coh = std::max(1, hi);
            const int min_coh = std::min(0, lo);
            const SpecializationReport s = weight_specialize(Rational(0), max_coh, min_coh);
            auto r = make("", s.pass(), "coh in [" + std::to_string(min_coh) + ", " + std::to_string(max_coh) + "]");
            r.tables.push_back(cohomology_table("classical Ext of Y plus (raw)", s.classical_plus));
            r.tables.push_back(cohomology_table("classical Ext of Y minus (raw)", s.classical_minus));
            r.tables.push_back(cohomology_table("classical Ext of Y plus (sheared)", shear(s.classical_plus)));
            r.tables.push_back(cohomology_table("complete Ext of Y plus (sheared)", shear(s.complete_plus)));
            r.tables.push_back(cohomology_table("CE cohomology", s.ce_table));
            r.tables.push_back({"products", {"u sigma = 0", "sigma != 0", "matches CE"}, {{yes(s.u_sigma_zero), yes(s.sigma_nonzero), yes(s.matches_ce)}}});
            return r;
        }});
    }
    return out;
}

std::vector<NamedCheck> presentation_checks(const Presentation& p, int max_word_length)
{
    return {{"presentation: completion and relations", [p, max_word_length] {
        const RewriteSystem rs = complete(p, max_word_length);
        bool relations = true;
        for (const auto& r : p.relations())
            relations = relations && rs.normal_form(r).is_zero();
        auto r = make("", rs.is_complete() && relations, "word length <= " + std::to_string(max_word_length));
        r.tables.push_back({"rewriting", {"generators", "relations", "rules", "complete"},
                            {{std::to_string(p.size()), std::to_string(p.relations().size()), std::to_string(rs.rules().size()), yes(rs.is_complete())}}});
        if (!rs.is_complete())
            r.status = Status::UnreliableWindow;
        return r;
    }}};
}

std::vector<NamedCheck> hilbert_checks(const Presentation& p, int max_word_length)
{
    return {{"hilbert: normal words by length", [p, max_word_length] {
        const RewriteSystem rs = complete(p, max_word_length);
        auto r = make("", true, "word length <= " + std::to_string(max_word_length));
        if (!rs.is_complete())
            r.status = Status::UnreliableWindow;
        r.tables.push_back(series_table("Hilbert function", "length", hilbert(rs, Grading::WordLength, max_word_length)));
        return r;
    }}};
}

std::vector<NamedCheck> full_suite(const SuiteOptions& o)
{
    std::vector<NamedCheck> out;
    auto add = [&](std::vector<NamedCheck> v) {
        for (auto& c : v)
            out.push_back(std::move(c));
    };
    add(sign_checks());
    add(lie_checks());
    add(ce_checks(sl11(), "sl(1|1)", 3, true));
    add(curvature_checks());
    add(cobar_checks());
    add(twisted_tensor_checks());
    add(spencer_checks(default_spencer_spaces()));
    add(morita_checks({0, 1, 2}));
    add(koszul_moment_checks(sl11(), "sl(1|1)", 5));
    SuiteOptions all = o;
    all.verify_all = true;
    add(sl11_checks(all));
    return out;
}

}  // namespace superkoszul
