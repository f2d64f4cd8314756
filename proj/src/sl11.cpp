#include "superkoszul/sl11.hpp"

#include "superkoszul/ce.hpp"
#include "superkoszul/error.hpp"

#include <climits>
#include <optional>
#include <set>
#include <tuple>

namespace superkoszul {

namespace {

const Degree weight_h{0, 0, 2};

Degree degree_of(const Presentation& p, const Element& x)
{
    return x.is_zero() ? Degree{} : p.degree(x.leading_word());
}

bool odd_element(const Presentation& p, const Element& x) { return !x.is_zero() && degree_of(p, x).odd(); }

std::vector<Word> words_up_to(const RewriteSystem& rs, int max_length)
{
    std::vector<Word> out;
    for (int n = 0; n <= max_length; ++n) {
        auto ws = rs.normal_words(n);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

// Coordinate rows of several groups of elements over one shared word index.
std::vector<linalg::Mat> coordinate_rows(const std::vector<std::vector<Element>>& groups)
{
    std::map<Word, std::size_t, WordOrder> index;
    for (const auto& g : groups)
        for (const auto& x : g)
            for (const auto& [w, c] : x.terms())
                index.emplace(w, index.size());
    std::vector<linalg::Mat> out;
    for (const auto& g : groups) {
        linalg::Mat m;
        m.cols = index.size();
        for (const auto& x : g) {
            linalg::Vec v(index.size());
            for (const auto& [w, c] : x.terms())
                v[index.at(w)] = c;
            m.push_row(std::move(v));
        }
        out.push_back(std::move(m));
    }
    return out;
}

long span_rank(const std::vector<Element>& xs) { return static_cast<long>(linalg::rank(coordinate_rows({xs})[0])); }

CohomologyTable nonzero(const CohomologyTable& t)
{
    CohomologyTable out;
    for (const auto& [d, n] : t)
        if (n != 0)
            out[d] = n;
    return out;
}

// Local indices of C^n whose basis vector has the given Degree.
std::vector<int> block(const ComplexWindow& c, const Degree& d)
{
    std::vector<int> out;
    const GradedSpace& v = c.space(d.coh);
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v[i].degree == d)
            out.push_back(static_cast<int>(i));
    return out;
}

bool is_coboundary(const ComplexWindow& c, int n, const linalg::Vec& v)
{
    if (n - 1 < c.lo())
        return false;
    return linalg::in_row_span(linalg::transpose(c.matrix(n - 1)), v);
}

bool is_cocycle(const ComplexWindow& c, int n, const linalg::Vec& v)
{
    if (n >= c.hi())
        return true;
    const linalg::Mat m = c.matrix(n);
    for (const auto& row : m.rows) {
        Rational s = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            s += row[j] * v[j];
        if (s != 0)
            return false;
    }
    return true;
}

}  // namespace

SuperSpace flag_space() { return {{{"t", 0, true, 1}, {"eps", 1, false, 1}}}; }

Element AnchorMap::operator()(const LieVector& x) const
{
    Element out;
    for (const auto& [k, c] : x)
        out += images[k] * c;
    return out;
}

AnchorMap build_anchor()
{
    AnchorMap a;
    a.source = sl11();
    a.target = weyl_algebra(flag_space());
    const Presentation& p = a.target.presentation;
    a.images.resize(a.source.dim());
    a.images[a.source.index_of("e")] = p.parse("eps*d_t");
    a.images[a.source.index_of("f")] = p.parse("t*d_eps");
    a.images[a.source.index_of("h")] = p.parse("t*d_t + eps*d_eps");
    return a;
}

std::vector<std::pair<std::string, std::string>> anchor_violations(const AnchorMap& a, const RewriteSystem& rs)
{
    std::vector<std::pair<std::string, std::string>> out;
    const auto& basis = a.source.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Element lhs = a(a.source.bracket(static_cast<int>(i), static_cast<int>(j)));
            const Element rhs = supercommutator(a.images[i], a.images[j], a.target.presentation);
            if (!rs.normal_form(lhs - rhs).is_zero())
                out.emplace_back(basis[i].name, basis[j].name);
        }
    return out;
}

Presentation enveloping_sl11()
{
    const Presentation u = universal_enveloping(sl11());
    Presentation p;
    for (const auto& g : u.generators())
        p.add_generator({g.name, {0, g.degree.s, g.name == "h" ? 2 : 1}, g.weight, 0});
    for (const auto& r : u.relations())
        p.add_relation(r);
    p.commutation_shortcut = u.commutation_shortcut;
    return p;
}

Presentation dt_presentation()
{
    Presentation p;
    p.add_generator({"alpha", {0, 1, -1}, 0, 0});
    p.add_generator({"f", {0, -1, 1}, 1, 0});
    p.add_generator({"h", weight_h, 1, 0});
    p.add_relation("alpha*f + f*alpha - 1");
    p.add_relation("alpha*alpha");
    p.add_relation("f*f");
    p.add_relation("h*alpha - alpha*h");
    p.add_relation("h*f - f*h");
    return p;
}

Element substitute(const Element& x, const std::vector<Element>& images)
{
    Element out;
    for (const auto& [w, c] : x.terms()) {
        Element prod = Element::scalar(c);
        for (int g : w)
            prod = prod * images[g];
        out += prod;
    }
    return out;
}

TInvariantAlgebra t_invariant_algebra()
{
    TInvariantAlgebra t;
    t.presentation = dt_presentation();
    t.anchor = build_anchor();
    const Presentation& w = t.anchor.target.presentation;
    t.images = {w.parse("eps*t_inv"), w.parse("t*d_eps"), w.parse("t*d_t + eps*d_eps")};
    const RewriteSystem rs = complete(w, 8);
    for (const auto& r : t.presentation.relations())
        if (!rs.normal_form(substitute(r, t.images)).is_zero())
            throw Error(ErrorKind::RelationFailure, "relation " + t.presentation.to_string(r) + " does not vanish on the T-invariant operators");
    return t;
}

bool TInvariantReport::pass() const
{
    if (!(relations_vanish && alpha_f_commutator && e_alpha_zero && e_equals_alpha_h && image_inside))
        return false;
    for (const auto& [a, n] : by_h_power)
        if (n != 4)
            return false;
    for (const auto& [n, d] : invariant_dim)
        if (image_rank.at(n) != d || abstract_dim.at(n) != d)
            return false;
    return !by_h_power.empty() && !invariant_dim.empty();
}

TInvariantReport t_invariant_report(const TInvariantAlgebra& t, int max_order)
{
    TInvariantReport r;
    const Presentation& wp = t.anchor.target.presentation;
    const RewriteSystem rs = complete(wp, 8);
    const Presentation& p = t.presentation;
    const RewriteSystem ts = complete(p, 8);

    r.relations_vanish = true;
    for (const auto& rel : p.relations())
        r.relations_vanish = r.relations_vanish && rs.normal_form(substitute(rel, t.images)).is_zero();
    const Element& alpha = t.images[0];
    const Element& f = t.images[1];
    const Element& h = t.images[2];
    const Element e = t.anchor.images[t.anchor.source.index_of("e")];
    r.alpha_f_commutator = rs.normal_form(alpha * f + f * alpha - Element::scalar(1)).is_zero();
    r.e_alpha_zero = rs.normal_form(e * alpha).is_zero() && rs.normal_form(alpha * e).is_zero();
    r.e_equals_alpha_h = rs.normal_form(e - alpha * h).is_zero();

    const int hgen = p.at("h");
    const std::vector<Word> words = words_up_to(ts, max_order + 2);
    for (const auto& w : words) {
        int k = 0;
        for (int g : w)
            k += g == hgen;
        if (k <= max_order)
            ++r.by_h_power[k];
    }

    // Torus-weight-0 monomials t^a ε^b ∂_t^c ∂_ε^d: a = c + d − b.
    const DiffOpAlgebra& d = t.anchor.target;
    r.image_inside = true;
    for (int n = 0; n <= max_order; ++n) {
        std::vector<Element> inv, img;
        for (int c = 0; c <= n; ++c)
            for (int dd = 0; dd <= 1 && c + dd <= n; ++dd)
                for (int b = 0; b <= 1; ++b)
                    inv.push_back(rs.normal_form(d.monomial({c + dd - b, b}, {c, dd})));
        long count = 0;
        for (const auto& w : words)
            if (p.weight(w) <= n) {
                ++count;
                img.push_back(rs.normal_form(substitute(Element::word(w), t.images)));
            }
        const auto rows = coordinate_rows({inv, img});
        r.abstract_dim[n] = count;
        r.invariant_dim[n] = static_cast<long>(linalg::rank(rows[0]));
        r.image_rank[n] = static_cast<long>(linalg::rank(rows[1]));
        if (linalg::stacked_rank(rows[0], rows[1]) != linalg::rank(rows[0]))
            r.image_inside = false;
    }
    return r;
}

bool MomentMapReport::pass() const
{
    if (!gr_commutative || !mu_matches || quotient_dims != gr_dims || gr_dims.empty())
        return false;
    for (const auto& [w, n] : gr_dims)
        if (map_rank.at(w) != n)
            return false;
    return true;
}

MomentMapReport moment_map_check(const TInvariantAlgebra& t, int max_weight)
{
    MomentMapReport r;
    const Presentation& p = t.presentation;
    const Presentation gr = associated_graded(p);
    const RewriteSystem grs = complete(gr, 10);
    r.gr_commutative = true;
    for (std::size_t g = 0; g < gr.size(); ++g)
        r.gr_commutative = r.gr_commutative && is_central(Element::letter(static_cast<int>(g)), grs);

    // Preimages of ρ(e), ρ(f), ρ(h) among operators of order ≤ 2, then
    // their principal symbols.
    const Presentation& wp = t.anchor.target.presentation;
    const RewriteSystem rs = complete(wp, 8);
    const RewriteSystem ts = complete(p, 8);
    std::vector<Word> cand;
    for (const auto& w : words_up_to(ts, 4))
        if (p.weight(w) <= 2)
            cand.push_back(w);
    std::vector<Element> imgs;
    for (const auto& w : cand)
        imgs.push_back(rs.normal_form(substitute(Element::word(w), t.images)));
    const std::vector<std::string> expected = {"alpha*h", "f", "h"};
    r.mu_matches = true;
    for (std::size_t k = 0; k < 3; ++k) {
        const Element target = rs.normal_form(t.anchor.images[k]);
        std::vector<Element> all = imgs;
        all.push_back(target);
        const auto rows = coordinate_rows({all})[0];
        linalg::Mat m(rows.cols, imgs.size());
        linalg::Vec b(rows.cols);
        for (std::size_t j = 0; j < imgs.size(); ++j)
            for (std::size_t i = 0; i < rows.cols; ++i)
                m[i][j] = rows[j][i];
        for (std::size_t i = 0; i < rows.cols; ++i)
            b[i] = rows[imgs.size()][i];
        const auto sol = linalg::solve(m, b);
        if (!sol) {
            r.mu_matches = false;
            r.mu_images.push_back("none");
            continue;
        }
        int top = INT_MIN;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if ((*sol)[j] != 0)
                top = std::max(top, p.weight(cand[j]));
        Element symbol;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if ((*sol)[j] != 0 && p.weight(cand[j]) == top)
                symbol.add(cand[j], (*sol)[j]);
        symbol = grs.normal_form(symbol);
        r.mu_images.push_back(gr.to_string(symbol));
        r.mu_matches = r.mu_matches && symbol == grs.normal_form(gr.parse(expected[k]));
    }

    // O_{g*}[α]/(e − αh) mapped to gr D^T.
    Presentation q;
    q.add_generator({"e", {0, 1, 1}, 0, 0});
    q.add_generator({"f", {0, -1, 1}, 0, 0});
    q.add_generator({"h", weight_h, 0, 0});
    q.add_generator({"alpha", {0, 1, -1}, 0, 0});
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Element x = Element::letter(static_cast<int>(i));
        if (q.generators()[i].degree.odd())
            q.add_relation(x * x);
        for (std::size_t j = i + 1; j < q.size(); ++j)
            q.add_relation(supercommutator(x, Element::letter(static_cast<int>(j)), q));
    }
    q.add_relation("e - alpha*h");
    const RewriteSystem qs = complete(q, 10);
    const std::vector<Element> mu = {gr.parse("alpha*h"), gr.parse("f"), gr.parse("h"), gr.parse("alpha")};
    // The associated graded construction adds the order weight to the h
    // slot; subtract it again to compare in the w-grading.
    std::map<int, long> qd, gd;
    for (const auto& word : words_up_to(qs, max_weight + 3))
        ++qd[q.degree(word).h];
    for (const auto& word : words_up_to(grs, max_weight + 3))
        ++gd[gr.degree(word).h - gr.weight(word)];
    for (int w = -1; w <= max_weight; ++w) {
        r.quotient_dims[w] = qd.count(w) ? qd.at(w) : 0;
        r.gr_dims[w] = gd.count(w) ? gd.at(w) : 0;
        std::vector<Element> imgs_w;
        for (const auto& word : words_up_to(qs, max_weight + 3))
            if (q.degree(word).h == w)
                imgs_w.push_back(grs.normal_form(substitute(Element::word(word), mu)));
        r.map_rank[w] = span_rank(imgs_w);
    }
    return r;
}

ResolutionData periodic_resolution(int n_terms)
{
    if (n_terms < 2)
        throw Error(ErrorKind::WindowTooSmall, "the periodic resolution needs at least two terms");
    ResolutionData r;
    r.n_terms = n_terms;
    r.ug = enveloping_sl11();
    r.dt = dt_presentation();
    r.rho = {r.dt.parse("alpha*h"), r.dt.parse("f"), r.dt.parse("h")};
    const Element e = r.ug.gen("e");
    const Element zero;
    r.matrices.resize(n_terms + 1);
    r.matrices[1] = {{zero, e}, {e, -(e * r.ug.gen("f"))}};
    for (int k = 2; k <= n_terms; ++k)
        r.matrices[k] = {{e, zero}, {zero, e}};
    r.augmentation = {Element::scalar(1), r.dt.gen("alpha")};

    r.generators.resize(n_terms + 1);
    for (const auto& a : r.augmentation)
        r.generators[0].push_back(degree_of(r.dt, a));
    for (int k = 1; k <= n_terms; ++k)
        for (const auto& row : r.matrices[k]) {
            std::optional<Degree> deg;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j].is_zero())
                    continue;
                const Degree d = degree_of(r.ug, row[j]) + r.generators[k - 1][j];
                if (deg && *deg != d)
                    throw Error(ErrorKind::InvalidArgument, "resolution matrix row is not homogeneous");
                deg = d;
            }
            r.generators[k].push_back(deg.value_or(Degree{}));
        }

    const RewriteSystem us = complete(r.ug, 8);
    const RewriteSystem ds = complete(r.dt, 8);
    for (std::size_t i = 0; i < 2; ++i) {
        Element c;
        for (std::size_t j = 0; j < 2; ++j)
            c += substitute(r.matrices[1][i][j], r.rho) * r.augmentation[j];
        if (!ds.normal_form(c).is_zero())
            throw Error(ErrorKind::CompositeNonzero, "augmentation composite, row " + std::to_string(i));
    }
    for (int k = 2; k <= n_terms; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t l = 0; l < 2; ++l) {
                Element c;
                for (std::size_t j = 0; j < 2; ++j)
                    c += r.matrices[k][i][j] * r.matrices[k - 1][j][l];
                if (!us.normal_form(c).is_zero())
                    throw Error(ErrorKind::CompositeNonzero, "composite at stage " + std::to_string(k));
            }
    return r;
}

bool augmentation_composite_in_weyl(const ResolutionData& r, const TInvariantAlgebra& t)
{
    const RewriteSystem rs = complete(t.anchor.target.presentation, 8);
    std::vector<Element> aug;
    for (const auto& a : r.augmentation)
        aug.push_back(substitute(a, t.images));
    for (std::size_t i = 0; i < 2; ++i) {
        Element c;
        for (std::size_t j = 0; j < 2; ++j)
            c += substitute(r.matrices[1][i][j], t.anchor.images) * aug[j];
        if (!rs.normal_form(c).is_zero())
            return false;
    }
    return true;
}

ComplexWindow resolution_window(const ResolutionData& r, int max_weight)
{
    const RewriteSystem us = complete(r.ug, 8);
    const RewriteSystem ds = complete(r.dt, 8);
    const std::vector<Word> uwords = words_up_to(us, std::max(0, max_weight + 2));
    const std::vector<Word> dwords = words_up_to(ds, std::max(0, max_weight + 3));

    ComplexBuilder b;
    std::map<std::tuple<int, int, Word>, int> id;
    std::map<Word, int, WordOrder> target;
    for (const auto& w : dwords) {
        const Degree d = r.dt.degree(w);
        if (d.h <= max_weight)
            target[w] = b.add(r.dt.word_name(w), d + Degree{1, 0, 0});
    }
    for (int k = 0; k <= r.n_terms; ++k)
        for (int i = 0; i < 2; ++i)
            for (const auto& w : uwords) {
                const Degree d = r.ug.degree(w) + r.generators[k][i];
                if (d.h <= max_weight)
                    id[{k, i, w}] = b.add(r.ug.word_name(w) + "·g" + std::to_string(k) + "_" + std::to_string(i), d + Degree{-k, 0, 0});
            }
    for (const auto& [key, src] : id) {
        const auto& [k, i, w] = key;
        if (k == 0) {
            const Element img = ds.normal_form(substitute(Element::word(w), r.rho) * r.augmentation[i]);
            for (const auto& [tw, c] : img.terms())
                b.add_entry(target.at(tw), src, c);
            continue;
        }
        for (int j = 0; j < 2; ++j) {
            const Element& m = r.matrices[k][i][j];
            if (m.is_zero())
                continue;
            const Element img = us.normal_form(Element::word(w) * m);
            for (const auto& [tw, c] : img.terms())
                b.add_entry(id.at({k - 1, j, tw}), src, c);
        }
    }
    return b.build(-r.n_terms, 1, false, true);
}

Degree shear(const Degree& d) { return {d.coh, d.s, d.h + d.coh}; }

CohomologyTable shear(const CohomologyTable& t)
{
    CohomologyTable out;
    for (const auto& [d, n] : t)
        out[shear(d)] += n;
    return out;
}

CohomologyTable wbar_oracle(int max_coh, int max_weight)
{
    const std::vector<Degree> clifford = {{0, 0, 0}, {0, 1, -1}, {0, -1, 1}, {0, 0, 0}};
    std::vector<Degree> wbar;
    for (int a = 0; 2 * a <= max_weight + 1; ++a)
        wbar.push_back({0, 0, 2 * a});
    for (int b = 1; b <= max_coh; ++b)
        wbar.push_back({b, -b, 0});
    CohomologyTable out;
    for (const auto& x : wbar)
        for (const auto& y : clifford) {
            const Degree d = x + y;
            if (d.coh <= max_coh && d.h <= max_weight)
                ++out[d];
        }
    return out;
}

bool WeylMonadReport::pass() const
{
    return matches && h_central && hu_zero && h_torsion_free_in_degree_zero && closed_under_composition && !table.empty();
}

WeylMonadReport weyl_monad(int max_coh, int max_sheared_weight)
{
    if (max_coh < 1 || max_sheared_weight < 2)
        throw Error(ErrorKind::WindowTooSmall, "Weyl monad window needs max_coh >= 1 and weight >= 2");
    WeylMonadReport rep;
    rep.max_coh = max_coh;
    rep.max_sheared_weight = max_sheared_weight;
    const int K = max_coh + 1;
    rep.n_terms = K;
    const ResolutionData r = periodic_resolution(std::max(K, 2));
    const RewriteSystem us = complete(r.ug, 8);
    const RewriteSystem ds = complete(r.dt, 8);

    // Stage k keeps every block of cochain weight ≤ cap(k); the blocks of
    // sheared weight ≤ max_sheared_weight are then complete at k−1, k, k+1.
    auto cap = [&](int k) { return max_sheared_weight - k + 2; };
    int max_dw = 0;
    for (int k = 0; k <= K; ++k)
        for (const auto& g : r.generators[k])
            max_dw = std::max(max_dw, cap(k) + g.h);
    rep.max_weight = max_dw;
    const std::vector<Word> dwords = words_up_to(ds, max_dw + 3);

    ComplexBuilder b;
    std::map<std::tuple<int, int, Word>, int> id;
    std::vector<std::vector<std::tuple<int, Word>>> local(K + 1);
    for (int k = 0; k <= K; ++k)
        for (int i = 0; i < 2; ++i)
            for (const auto& w : dwords) {
                const Degree d = r.dt.degree(w) - r.generators[k][i] + Degree{k, 0, 0};
                if (d.h > cap(k))
                    continue;
                const int g = b.add("[" + std::to_string(k) + ":" + std::to_string(i) + "]" + r.dt.word_name(w), d);
                id[{k, i, w}] = g;
                local[k].emplace_back(i, w);
            }
    for (const auto& [key, src] : id) {
        const auto& [k, i, w] = key;
        if (k == K)
            continue;
        const bool phi_odd = b.vector(src).degree.odd();
        for (int i2 = 0; i2 < 2; ++i2) {
            const Element& m = r.matrices[k + 1][i2][i];
            if (m.is_zero())
                continue;
            const int sign = (phi_odd && odd_element(r.ug, m)) ? -1 : 1;
            const Element img = ds.normal_form(substitute(m, r.rho) * Element::word(w));
            for (const auto& [tw, c] : img.terms()) {
                auto it = id.find({k + 1, i2, tw});
                if (it != id.end())
                    b.add_entry(it->second, src, c * sign);
            }
        }
    }
    const ComplexWindow c = b.build(0, K, true, false);
    if (!verify_differential(c))
        throw Error(ErrorKind::SignIncoherence, "Hom complex differential does not square to zero");

    auto in_region = [&](const Degree& d) { return d.coh <= max_coh && shear(d).h <= max_sheared_weight; };
    for (const auto& [d, n] : nonzero(cohomology(c)))
        if (in_region(d))
            rep.table[d] = n;
    rep.oracle = wbar_oracle(max_coh, max_sheared_weight);
    rep.matches = shear(rep.table) == rep.oracle;

    // Values of a stage-k cochain given by a coordinate vector on C^k.
    auto values = [&](int k, const linalg::Vec& v) {
        std::vector<Element> out(2);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                const auto& [i, w] = local[k][j];
                out[i].add(w, v[j]);
            }
        return out;
    };
    auto vector_of = [&](int k, const std::vector<Element>& vals) -> std::optional<linalg::Vec> {
        linalg::Vec v(c.space(k).dim());
        for (int i = 0; i < 2; ++i)
            for (const auto& [w, coef] : vals[i].terms()) {
                auto it = id.find({k, i, w});
                if (it == id.end())
                    return std::nullopt;
                v[b.local(it->second)] = coef;
            }
        return v;
    };
    auto times_h = [&](const std::vector<Element>& vals) {
        std::vector<Element> out;
        for (const auto& x : vals)
            out.push_back(ds.normal_form(x * r.dt.gen("h")));
        return out;
    };

    // Multiplication by h on cohomology: injective in degree 0, zero above.
    rep.hu_zero = true;
    rep.h_torsion_free_in_degree_zero = true;
    for (const auto& [d, n] : rep.table) {
        const Degree dh = d + weight_h;
        if (!in_region(dh))
            continue;
        const std::vector<int> cols = block(c, d);
        linalg::Mat sub(c.matrix(d.coh).row_count(), cols.size());
        const linalg::Mat full = c.matrix(d.coh);
        for (std::size_t i = 0; i < full.row_count(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                sub[i][j] = full[i][cols[j]];
        std::vector<linalg::Vec> zs, hz;
        for (const auto& kv : linalg::kernel(sub)) {
            linalg::Vec z(c.space(d.coh).dim());
            for (std::size_t j = 0; j < cols.size(); ++j)
                z[cols[j]] = kv[j];
            const auto v = vector_of(d.coh, times_h(values(d.coh, z)));
            if (!v)
                throw Error(ErrorKind::WindowTooSmall, "h-multiple leaves the Hom window");
            zs.push_back(z);
            hz.push_back(*v);
        }
        if (d.coh == 0) {
            linalg::Mat a, bh;
            a.cols = bh.cols = c.space(0).dim();
            for (auto& z : zs)
                a.push_row(z);
            for (auto& z : hz)
                bh.push_row(z);
            if (linalg::rank(a) != linalg::rank(bh))
                rep.h_torsion_free_in_degree_zero = false;
        } else {
            for (const auto& v : hz)
                if (!is_coboundary(c, d.coh, v))
                    rep.hu_zero = false;
        }
    }

    // Degree-0 classes as module maps D^T → D^T: ψ(y) is computed through a
    // preimage y = ρ(a)·1 + ρ(b)·α.
    const std::vector<Word> uwords = words_up_to(us, max_dw + 2);
    auto lift = [&](const Element& y) -> std::optional<std::pair<Element, Element>> {
        if (y.is_zero())
            return std::make_pair(Element(), Element());
        const Degree dy = degree_of(r.dt, y);
        std::vector<std::pair<int, Word>> unknowns;
        std::vector<Element> imgs{ds.normal_form(y)};
        for (int j = 0; j < 2; ++j)
            for (const auto& w : uwords)
                if (r.ug.degree(w) + r.generators[0][j] == dy) {
                    unknowns.emplace_back(j, w);
                    imgs.push_back(ds.normal_form(substitute(Element::word(w), r.rho) * r.augmentation[j]));
                }
        const linalg::Mat rows = coordinate_rows({imgs})[0];
        linalg::Mat m(rows.cols, unknowns.size());
        linalg::Vec rhs(rows.cols);
        for (std::size_t i = 0; i < rows.cols; ++i) {
            rhs[i] = rows[0][i];
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                m[i][j] = rows[j + 1][i];
        }
        const auto sol = linalg::solve(m, rhs);
        if (!sol)
            return std::nullopt;
        std::pair<Element, Element> out;
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if ((*sol)[j] != 0)
                (unknowns[j].first == 0 ? out.first : out.second).add(unknowns[j].second, (*sol)[j]);
        return out;
    };
    auto apply = [&](const std::vector<Element>& psi, const Element& y) -> std::optional<Element> {
        const auto ab = lift(y);
        if (!ab)
            return std::nullopt;
        const bool psi_odd = !psi[0].is_zero() ? degree_of(r.dt, psi[0]).odd() != r.generators[0][0].odd()
                                               : (!psi[1].is_zero() && degree_of(r.dt, psi[1]).odd() != r.generators[0][1].odd());
        Element out;
        const Element* parts[2] = {&ab->first, &ab->second};
        for (int j = 0; j < 2; ++j)
            for (const auto& [w, coef] : parts[j]->terms()) {
                const int sign = (psi_odd && r.ug.degree(w).odd()) ? -1 : 1;
                out += substitute(Element::word(w), r.rho) * psi[j] * (coef * sign);
            }
        return ds.normal_form(out);
    };
    auto is_module_map = [&](const std::vector<Element>& chi) {
        const bool chi_odd = !chi[0].is_zero() ? degree_of(r.dt, chi[0]).odd() != r.generators[0][0].odd()
                                               : (!chi[1].is_zero() && degree_of(r.dt, chi[1]).odd() != r.generators[0][1].odd());
        for (int i2 = 0; i2 < 2; ++i2) {
            Element s;
            for (int j = 0; j < 2; ++j) {
                const Element& m = r.matrices[1][i2][j];
                if (m.is_zero())
                    continue;
                const int sign = (chi_odd && odd_element(r.ug, m)) ? -1 : 1;
                s += substitute(m, r.rho) * chi[j] * sign;
            }
            if (!ds.normal_form(s).is_zero())
                return false;
        }
        return true;
    };

    std::vector<std::vector<Element>> h0;
    for (const auto& [d, n] : rep.table) {
        if (d.coh != 0 || d.h > 2)
            continue;
        const std::vector<int> cols = block(c, d);
        const linalg::Mat full = c.matrix(0);
        linalg::Mat sub(full.row_count(), cols.size());
        for (std::size_t i = 0; i < full.row_count(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                sub[i][j] = full[i][cols[j]];
        for (const auto& kv : linalg::kernel(sub)) {
            linalg::Vec z(c.space(0).dim());
            for (std::size_t j = 0; j < cols.size(); ++j)
                z[cols[j]] = kv[j];
            h0.push_back(values(0, z));
        }
    }
    rep.closed_under_composition = !h0.empty();
    rep.h_central = is_central(r.dt.gen("h"), ds) && is_central(r.ug.gen("h"), us) && !h0.empty();
    for (const auto& psi : h0) {
        std::vector<Element> left, right;
        for (int j = 0; j < 2; ++j) {
            const auto v = apply(psi, ds.normal_form(r.augmentation[j] * r.dt.gen("h")));
            right.push_back(v.value_or(Element()));
            left.push_back(ds.normal_form(psi[j] * r.dt.gen("h")));
            if (!v)
                rep.h_central = false;
        }
        rep.h_central = rep.h_central && left == right;
        for (const auto& phi : h0) {
            std::vector<Element> chi;
            for (int j = 0; j < 2; ++j) {
                const auto v = apply(psi, phi[j]);
                if (!v) {
                    rep.closed_under_composition = false;
                    break;
                }
                chi.push_back(*v);
            }
            if (chi.size() == 2 && !is_module_map(chi))
                rep.closed_under_composition = false;
        }
    }
    return rep;
}

namespace {

// Hom_W(P, Y) for the 2-periodic resolution … →(·x) W →(·h) W → Y of
// Y = k[x] over W = k[h, x]/(hx), over stages [k_lo, k_hi] and x-powers
// ≤ b_max. φ_{k,b} sends the generator of P_k to x^b; δφ_{k,b} is
// φ_{k+1,b+1} when P_{k+1} → P_k is ·x and zero when it is ·h.
struct PeriodicExt {
    ComplexWindow complex;
    std::map<std::pair<int, int>, int> id;
    std::map<std::pair<int, int>, int> local;
    std::map<std::pair<int, int>, Degree> degree;
    std::set<Degree> reliable;
    std::set<Degree> unreliable;
};

PeriodicExt periodic_ext(const Degree& x, int k_lo, int k_hi, int b_max, bool true_start)
{
    auto step = [&](int k) { return (k % 2 != 0) ? weight_h : x; };
    std::map<int, Degree> g{{0, Degree{}}};
    for (int k = 1; k <= k_hi; ++k)
        g[k] = g[k - 1] + step(k);
    for (int k = -1; k >= k_lo; --k)
        g[k] = g[k + 1] - step(k + 1);

    PeriodicExt out;
    ComplexBuilder b;
    for (int k = k_lo; k <= k_hi; ++k)
        for (int bb = 0; bb <= b_max; ++bb) {
            const Degree d = x * bb - g[k] + Degree{k, 0, 0};
            out.id[{k, bb}] = b.add("phi" + std::to_string(k) + "(x^" + std::to_string(bb) + ")", d);
            out.degree[{k, bb}] = d;
            const bool ok = (k > k_lo || true_start) && k < k_hi && bb < b_max;
            (ok ? out.reliable : out.unreliable).insert(d);
        }
    for (int k = k_lo; k < k_hi; ++k)
        if (step(k + 1) == x)
            for (int bb = 0; bb < b_max; ++bb)
                b.add_entry(out.id.at({k + 1, bb + 1}), out.id.at({k, bb}), 1);
    for (const auto& [key, gid] : out.id)
        out.local[key] = b.local(gid);
    out.complex = b.build(true, true);
    return out;
}

CohomologyTable reliable_table(const PeriodicExt& e, int min_coh, int max_coh)
{
    CohomologyTable out;
    for (const auto& [d, n] : nonzero(cohomology(e.complex)))
        if (d.coh >= min_coh && d.coh <= max_coh && e.reliable.count(d) && !e.unreliable.count(d))
            out[d] = n;
    return out;
}

}  // namespace

bool SpecializationReport::pass() const
{
    if (lambda != 0)
        return dim == 4 && center_dim == 1 && super_center_dim == 1 && module_dim == 2 && image_dim == 4 && relations_hold && morita_iso;
    return u_sigma_zero && sigma_nonzero && matches_ce && !classical_plus.empty();
}

SpecializationReport weight_specialize(const Rational& lambda, int max_coh, int min_complete_coh)
{
    if (max_coh < 1 || min_complete_coh > 0)
        throw Error(ErrorKind::WindowTooSmall, "specialization window must contain [0, 1]");
    SpecializationReport r;
    r.lambda = lambda;
    r.max_coh = max_coh;
    r.min_complete_coh = min_complete_coh;
    if (lambda != 0) {
        const Presentation q = specialize(dt_presentation(), "h", lambda);
        const RewriteSystem rs = complete(q, 8);
        const FiniteAlgebra fa(rs);
        r.dim = fa.dim();
        r.center_dim = fa.center_dim(false);
        r.super_center_dim = fa.center_dim(true);

        // Λ[ε] with α = ε·, f = ∂_ε and h = λ.
        std::vector<linalg::Mat> gens(q.size(), linalg::Mat(2, 2));
        gens[q.at("alpha")][1][0] = 1;
        gens[q.at("f")][0][1] = 1;
        gens[q.at("h")][0][0] = gens[q.at("h")][1][1] = lambda;
        r.module_dim = 2;
        r.relations_hold = true;
        for (const auto& rel : q.relations())
            r.relations_hold = r.relations_hold && linalg::is_zero(represent(rel, gens, 2));
        linalg::Mat image;
        image.cols = 4;
        for (const auto& w : fa.basis()) {
            const linalg::Mat m = represent(Element::word(w), gens, 2);
            image.push_row({m[0][0], m[0][1], m[1][0], m[1][1]});
        }
        r.image_dim = linalg::rank(image);

        // D on the odd line maps isomorphically: ε ↦ α, ∂_ε ↦ f.
        const DiffOpAlgebra dx = weyl_algebra({{{"eps", 1}}});
        std::vector<Element> to(dx.presentation.size());
        to[dx.coordinate[0]] = q.gen("alpha");
        to[dx.partial[0]] = q.gen("f");
        bool hom = true;
        for (const auto& rel : dx.presentation.relations())
            hom = hom && rs.normal_form(substitute(rel, to)).is_zero();
        const RewriteSystem xs = complete(dx.presentation, 8);
        const FiniteAlgebra fx(xs);
        std::vector<Element> imgs;
        for (const auto& w : fx.basis())
            imgs.push_back(rs.normal_form(substitute(Element::word(w), to)));
        r.morita_iso = hom && fx.dim() == fa.dim() && static_cast<std::size_t>(span_rank(imgs)) == fa.dim();
        return r;
    }

    const Degree u{1, -1, -1};
    const Degree v{1, 1, -1};
    const int k_hi = 2 * max_coh + 4;
    const int b_max = max_coh + 2;
    const PeriodicExt plus = periodic_ext(u, 0, k_hi, b_max, true);
    const PeriodicExt minus = periodic_ext(v, 0, k_hi, b_max, true);
    r.classical_plus = reliable_table(plus, 0, max_coh);
    r.classical_minus = reliable_table(minus, 0, max_coh);
    const PeriodicExt tate = periodic_ext(u, 2 * min_complete_coh - 4, k_hi, b_max, false);
    r.complete_plus = reliable_table(tate, min_complete_coh, max_coh);

    // σ = φ_{2,0} and u·σ = φ_{2,1} (the value multiplied by u).
    auto unit = [&](const PeriodicExt& e, int k, int bb) {
        const int n = e.degree.at({k, bb}).coh;
        linalg::Vec x(e.complex.space(n).dim());
        x[e.local.at({k, bb})] = 1;
        return std::make_pair(n, x);
    };
    const auto [ns, sigma] = unit(plus, 2, 0);
    const auto [nu, usigma] = unit(plus, 2, 1);
    r.sigma_nonzero = is_cocycle(plus.complex, ns, sigma) && !is_coboundary(plus.complex, ns, sigma);
    r.u_sigma_zero = is_cocycle(plus.complex, nu, usigma) && is_coboundary(plus.complex, nu, usigma);

    const LieSuperalgebra g = sl11();
    for (const auto& [d, n] : nonzero(cohomology(cochain_complex(g, trivial_module(g), max_coh + 1))))
        if (d.coh <= max_coh)
            r.ce_table[d] = n;
    r.matches_ce = shear(r.classical_plus) == r.ce_table && shear(r.classical_minus) == r.ce_table;
    return r;
}

}  // namespace superkoszul
