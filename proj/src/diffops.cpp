#include "superkoszul/diffops.hpp"

#include "superkoszul/error.hpp"
#include "superkoszul/supercomm.hpp"

#include <functional>
#include <set>

namespace superkoszul {

namespace {

bool is_odd(int s) { return (s % 2) != 0; }

void check_space(const SuperSpace& s)
{
    std::set<std::string> seen;
    for (const auto& c : s.coordinates) {
        if (!seen.insert(c.name).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate coordinate " + c.name);
        if (c.invertible && is_odd(c.s))
            throw Error(ErrorKind::InvalidArgument, "odd coordinate " + c.name + " cannot be invertible");
    }
}

// Coordinate order for generator declaration: invertible coordinates last,
// so that x and x_inv are adjacent in the term order and move the same way
// under commutation rules. With two or more torus directions completion
// need not close.
std::vector<std::size_t> torus_last(const SuperSpace& s)
{
    std::vector<std::size_t> out;
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t a = 0; a < s.coordinates.size(); ++a)
            if (s.coordinates[a].invertible == (pass == 1))
                out.push_back(a);
    return out;
}

std::string power(const std::string& base, int k)
{
    return k == 1 ? base : base + "^" + std::to_string(k);
}

// Completion of a Weyl-type presentation; these systems close at overlap
// length 3, so a small bound certifies every degree.
RewriteSystem complete_closed(const Presentation& p)
{
    RewriteSystem rs = complete(p, 8);
    if (!rs.is_complete())
        throw Error(ErrorKind::BoundTooSmall, "Weyl presentation did not close under completion");
    return rs;
}

using Exponents = std::vector<int>;

// Normal-word lookup for a set of operators x^α∂^β: each normalizes to
// c·word for a single word.
class OperatorIndex {
public:
    OperatorIndex(const DiffOpAlgebra& d, const RewriteSystem& rs) : d_(d), rs_(rs) {}

    int insert(const Exponents& alpha, const Exponents& beta)
    {
        auto key = std::make_pair(alpha, beta);
        auto it = ids_.find(key);
        if (it != ids_.end())
            return it->second;
        const Element nf = rs_.normal_form(d_.monomial(alpha, beta));
        if (nf.size() != 1)
            throw Error(ErrorKind::InvalidArgument, "operator monomial is not a single normal word");
        const int id = static_cast<int>(ops_.size());
        ops_.push_back(key);
        words_.push_back(nf.leading_word());
        by_word_[nf.leading_word()] = {id, nf.leading_coefficient()};
        ids_[key] = id;
        return id;
    }

    const Exponents& alpha(int id) const { return ops_[id].first; }
    const Exponents& beta(int id) const { return ops_[id].second; }
    Degree degree(int id) const { return d_.presentation.degree(words_[id]); }
    Element element(int id) const { return d_.monomial(alpha(id), beta(id)); }

    std::string name(int id) const
    {
        std::string out;
        auto put = [&](const std::string& f) { out += (out.empty() ? "" : "*") + f; };
        const auto& cs = d_.space.coordinates;
        for (std::size_t a = 0; a < cs.size(); ++a) {
            const int k = alpha(id)[a];
            if (k > 0)
                put(power(cs[a].name, k));
            else if (k < 0)
                put(power(cs[a].name + "_inv", -k));
        }
        for (std::size_t a = 0; a < cs.size(); ++a)
            if (beta(id)[a] > 0)
                put(power(partial_name(cs[a].name), beta(id)[a]));
        return out.empty() ? "1" : out;
    }

    // Coordinates of a normal-form element in the indexed operators.
    std::map<int, Rational> decompose(const Element& nf) const
    {
        std::map<int, Rational> out;
        for (const auto& [w, c] : nf.terms()) {
            auto it = by_word_.find(w);
            if (it == by_word_.end())
                throw Error(ErrorKind::WindowTooSmall, "operator " + d_.presentation.word_name(w) + " outside the window");
            out[it->second.first] += c / it->second.second;
        }
        return out;
    }

private:
    const DiffOpAlgebra& d_;
    const RewriteSystem& rs_;
    std::map<std::pair<Exponents, Exponents>, int> ids_;
    std::vector<std::pair<Exponents, Exponents>> ops_;
    std::vector<Word> words_;
    std::map<Word, std::pair<int, Rational>, WordOrder> by_word_;
};

// Cartesian product of per-coordinate integer ranges.
void for_each_vector(const std::vector<std::pair<int, int>>& ranges, const std::function<void(const Exponents&)>& f)
{
    Exponents v(ranges.size());
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
        if (a == ranges.size()) {
            f(v);
            return;
        }
        for (int k = ranges[a].first; k <= ranges[a].second; ++k) {
            v[a] = k;
            rec(a + 1);
        }
    };
    rec(0);
}

int sum(const Exponents& v)
{
    int s = 0;
    for (int x : v)
        s += x;
    return s;
}

}  // namespace

std::string partial_name(const std::string& coordinate) { return "d_" + coordinate; }
std::string differential_name(const std::string& coordinate) { return "d" + coordinate; }

Element DiffOpAlgebra::monomial(const std::vector<int>& alpha, const std::vector<int>& beta) const
{
    Element out = Element::scalar(1);
    for (std::size_t a = 0; a < coordinate.size(); ++a) {
        const int k = alpha[a];
        if (k < 0 && inverse[a] < 0)
            throw Error(ErrorKind::InvalidArgument, "negative power of a non-invertible coordinate");
        const int g = k >= 0 ? coordinate[a] : inverse[a];
        for (int i = 0; i < std::abs(k); ++i)
            out = out * Element::letter(g);
    }
    for (std::size_t a = 0; a < partial.size(); ++a)
        for (int i = 0; i < beta[a]; ++i)
            out = out * Element::letter(partial[a]);
    return out;
}

DiffOpAlgebra weyl_algebra(const SuperSpace& s)
{
    check_space(s);
    DiffOpAlgebra d;
    d.space = s;
    Presentation& p = d.presentation;
    for (const auto& c : s.coordinates)
        d.partial.push_back(p.add_generator({partial_name(c.name), {0, -c.s, 0}, 1, -c.tweight}));
    d.coordinate.assign(s.coordinates.size(), -1);
    for (std::size_t a : torus_last(s))
        d.coordinate[a] = p.add_generator({s.coordinates[a].name, {0, s.coordinates[a].s, 0}, 0, s.coordinates[a].tweight});

    auto commuting = [&](const std::vector<int>& gens) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Element x = Element::letter(gens[i]);
            if (p.generators()[gens[i]].degree.odd())
                p.add_relation(x * x);
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                p.add_relation(supercommutator(x, Element::letter(gens[j]), p));
        }
    };
    commuting(d.coordinate);
    commuting(d.partial);
    for (std::size_t a = 0; a < d.partial.size(); ++a)
        for (std::size_t b = 0; b < d.coordinate.size(); ++b) {
            Element r = supercommutator(Element::letter(d.partial[a]), Element::letter(d.coordinate[b]), p);
            if (a == b)
                r -= Element::scalar(1);
            p.add_relation(r);
        }

    d.inverse.assign(s.coordinates.size(), -1);
    for (std::size_t a = 0; a < s.coordinates.size(); ++a)
        if (s.coordinates[a].invertible) {
            p.declare_invertible(s.coordinates[a].name);
            d.inverse[a] = p.at(s.coordinates[a].name + "_inv");
        }
    // x_inv commutes with everything except its own partial, where
    // [∂_x, x⁻¹] = −x⁻².
    for (std::size_t a = 0; a < s.coordinates.size(); ++a) {
        if (d.inverse[a] < 0)
            continue;
        const Element u = Element::letter(d.inverse[a]);
        for (std::size_t b = 0; b < s.coordinates.size(); ++b) {
            if (b != a)
                p.add_relation(supercommutator(Element::letter(d.coordinate[b]), u, p));
            if (d.inverse[b] >= 0 && b > a)
                p.add_relation(supercommutator(u, Element::letter(d.inverse[b]), p));
            Element r = supercommutator(Element::letter(d.partial[b]), u, p);
            if (b == a)
                r += u * u;
            p.add_relation(r);
        }
    }
    return d;
}

OmegaAlgebra omega_algebra(const SuperSpace& s)
{
    check_space(s);
    OmegaAlgebra o;
    Presentation& p = o.algebra;
    std::vector<int> coords(s.coordinates.size(), -1), diffs;
    for (const auto& c : s.coordinates)
        diffs.push_back(p.add_generator({differential_name(c.name), {1, c.s, 0}, -1, c.tweight}));
    for (std::size_t a : torus_last(s))
        coords[a] = p.add_generator({s.coordinates[a].name, {0, s.coordinates[a].s, 0}, 0, s.coordinates[a].tweight});
    const std::size_t base = p.size();
    for (std::size_t i = 0; i < base; ++i) {
        const Element x = Element::letter(static_cast<int>(i));
        if (p.generators()[i].degree.odd())
            p.add_relation(x * x);
        for (std::size_t j = i + 1; j < base; ++j)
            p.add_relation(supercommutator(x, Element::letter(static_cast<int>(j)), p));
    }
    o.differential.assign(base, Element());
    for (std::size_t a = 0; a < coords.size(); ++a)
        o.differential[coords[a]] = Element::letter(diffs[a]);
    for (std::size_t a = 0; a < s.coordinates.size(); ++a) {
        if (!s.coordinates[a].invertible)
            continue;
        p.declare_invertible(s.coordinates[a].name);
        const Element u = p.gen(s.coordinates[a].name + "_inv");
        for (std::size_t g = 0; g < base; ++g)
            if (static_cast<int>(g) != coords[a])
                p.add_relation(supercommutator(u, Element::letter(static_cast<int>(g)), p));
        o.differential.push_back(-(u * u * Element::letter(diffs[a])));
    }
    // Inverses commute among themselves.
    for (std::size_t i = base; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            p.add_relation(supercommutator(Element::letter(static_cast<int>(i)), Element::letter(static_cast<int>(j)), p));
    return o;
}

ComplexWindow de_rham_complex(const SuperSpace& s, int max_degree)
{
    check_space(s);
    if (max_degree < 0)
        throw Error(ErrorKind::WindowTooSmall, "negative polynomial degree bound");
    std::vector<SuperVar> vars;
    for (const auto& c : s.coordinates) {
        if (c.invertible)
            throw Error(ErrorKind::InvalidArgument, "polynomial de Rham window needs non-invertible coordinates");
        vars.push_back({c.name, {0, c.s, 1}});
    }
    for (const auto& c : s.coordinates)
        vars.push_back({differential_name(c.name), {1, c.s, 1}});
    const SuperRing ring(vars);
    const std::size_t n = s.coordinates.size();
    std::vector<SuperPoly> images;
    for (std::size_t a = 0; a < n; ++a)
        images.push_back(SuperPoly::variable(&ring, n + a));
    for (std::size_t a = 0; a < n; ++a)
        images.push_back(SuperPoly(&ring));

    ComplexBuilder b;
    std::map<Monomial, int> id;
    const std::vector<Monomial> monos = ring.monomials_up_to(max_degree);
    for (const auto& m : monos)
        id[m] = b.add(ring.name(m), ring.degree(m));
    for (const auto& m : monos) {
        const SuperPoly dm = apply_derivation(ring, images, {1, 0, 0}, SuperPoly::monomial(&ring, m));
        for (const auto& [t, c] : dm.terms())
            b.add_entry(id.at(t), id.at(m), c);
    }
    return b.build(true, true);
}

SpencerComplex spencer_complex(const DiffOpAlgebra& d, const SpencerWindow& w)
{
    if (w.max_order < 1 || w.max_coordinate_degree < 0)
        throw Error(ErrorKind::WindowTooSmall, "Spencer window needs max_order >= 1 and a coordinate range");
    const RewriteSystem rs = complete_closed(d.presentation);
    const auto& cs = d.space.coordinates;
    const std::size_t nc = cs.size();
    const int nmax = w.max_order;

    std::vector<SuperVar> xi_vars;
    for (const auto& c : cs)
        xi_vars.push_back({"xi_" + c.name, {-1, -c.s, 0}});
    const SuperRing xi(xi_vars);

    std::vector<std::pair<int, int>> alpha_range, beta_range;
    for (const auto& c : cs) {
        if (is_odd(c.s))
            alpha_range.emplace_back(0, 1);
        else
            alpha_range.emplace_back(c.invertible ? -w.max_coordinate_degree : 0, w.max_coordinate_degree);
        beta_range.emplace_back(0, is_odd(c.s) ? 1 : nmax);
    }

    OperatorIndex ops(d, rs);
    std::vector<Exponents> alphas, betas;
    for_each_vector(alpha_range, [&](const Exponents& a) { alphas.push_back(a); });
    for_each_vector(beta_range, [&](const Exponents& b) {
        if (sum(b) <= nmax)
            betas.push_back(b);
    });
    const std::vector<Monomial> xis = xi.monomials_up_to(nmax);

    ComplexBuilder b;
    std::map<std::pair<int, Monomial>, int> id;
    std::map<int, int> level;
    std::map<Exponents, int> a_id;
    SpencerComplex out;
    for (const auto& alpha : alphas)
        for (const auto& beta : betas)
            for (const auto& m : xis) {
                const int n = sum(beta) + xi.length(m);
                if (n > nmax)
                    continue;
                const int op = ops.insert(alpha, beta);
                const std::string name = ops.name(op) + (xi.length(m) ? "⊗" + xi.name(m) : "");
                const int g = b.add(name, ops.degree(op) + xi.degree(m) + Degree{0, 0, n});
                id[{op, m}] = g;
                level[g] = n;
                if (n == 0)
                    ++out.order_zero_dim;
            }
    for (const auto& alpha : alphas) {
        const int op = ops.insert(alpha, Exponents(nc, 0));
        const int g = b.add("A:" + ops.name(op), ops.degree(op) + Degree{1, 0, 0});
        a_id[alpha] = g;
        level[g] = 0;
    }
    out.a_dim = alphas.size();

    for (const auto& [key, src] : id) {
        const auto& [op, m] = key;
        const Exponents& alpha = ops.alpha(op);
        const Exponents& beta = ops.beta(op);
        if (sum(beta) == 0 && xi.length(m) == 0) {
            b.add_entry(a_id.at(alpha), src, 1);
            continue;
        }
        const bool p_odd = ops.degree(op).odd();
        for (std::size_t a = 0; a < nc; ++a) {
            if (m[a] == 0)
                continue;
            const SuperPoly dm = left_partial(xi, a, SuperPoly::monomial(&xi, m));
            if (dm.is_zero())
                continue;
            const int sign = (p_odd && !is_odd(cs[a].s)) ? -1 : 1;
            const Element prod = rs.normal_form(ops.element(op) * Element::letter(d.partial[a]));
            const std::map<int, Rational> terms = ops.decompose(prod);
            for (const auto& [t, c] : terms)
                for (const auto& [mt, cm] : dm.terms())
                    b.add_entry(id.at({t, mt}), src, c * cm * sign);
        }
    }

    out.complex = b.build(-nmax, 1, true, true);
    for (int k = 0; k <= nmax; ++k) {
        std::vector<int> ids;
        for (const auto& [g, n] : level)
            if (n <= k)
                ids.push_back(g);
        out.filtration.stages.push_back(b.span(ids));
    }
    return out;
}

bool spencer_gr_exact(const SpencerComplex& sp, int n)
{
    const auto& st = sp.filtration.stages;
    if (n < 0 || n >= static_cast<int>(st.size()))
        throw Error(ErrorKind::WindowTooSmall, "filtration stage " + std::to_string(n) + " outside the window");
    const Subcomplex below = n == 0 ? Subcomplex{} : st[n - 1];
    const std::map<int, int> h = subquotient_cohomology(sp.complex, st[n], below);
    for (const auto& [deg, dim] : h)
        if (dim != 0)
            return false;
    return true;
}

DeRhamBlock de_rham_of_D(const DiffOpAlgebra& d, const std::vector<int>& euler_weight, int max_filtration)
{
    const auto& cs = d.space.coordinates;
    const std::size_t nc = cs.size();
    if (euler_weight.size() != nc)
        throw Error(ErrorKind::InvalidArgument, "one Euler weight per coordinate expected");
    const RewriteSystem rs = complete_closed(d.presentation);

    std::vector<SuperVar> dx_vars;
    for (const auto& c : cs)
        dx_vars.push_back({differential_name(c.name), {1, c.s, 0}});
    const SuperRing forms(dx_vars);

    // Form exponents are bounded by the block: at most 1 for even
    // coordinates, w+1 for odd ones; operator order then by the filtration.
    int i_cap = 0;
    for (std::size_t a = 0; a < nc; ++a)
        i_cap += is_odd(cs[a].s) ? std::max(0, euler_weight[a] + 1) : 1;
    const int beta_cap = std::max(0, max_filtration + i_cap);

    struct Cell {
        Monomial omega;
        Exponents alpha, beta;
    };
    std::vector<Cell> cells;
    Cell cur{Monomial(nc), Exponents(nc), Exponents(nc)};
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
        if (a == nc) {
            if (sum(cur.beta) - sum(cur.omega) <= max_filtration)
                cells.push_back(cur);
            return;
        }
        const int wa = euler_weight[a];
        if (is_odd(cs[a].s)) {
            for (int al = 0; al <= 1; ++al)
                for (int be = 0; be <= 1; ++be) {
                    const int i = wa - al + be;
                    if (i < 0)
                        continue;
                    cur.alpha[a] = al, cur.beta[a] = be, cur.omega[a] = i;
                    rec(a + 1);
                }
        } else {
            for (int i = 0; i <= 1; ++i)
                for (int be = 0; be <= beta_cap; ++be) {
                    const int al = wa - i + be;
                    if (al < 0 && !cs[a].invertible)
                        continue;
                    cur.alpha[a] = al, cur.beta[a] = be, cur.omega[a] = i;
                    rec(a + 1);
                }
        }
    };
    rec(0);

    OperatorIndex ops(d, rs);
    ComplexBuilder b;
    std::map<std::pair<Monomial, int>, int> id;
    std::map<int, int> level;
    int kmin = max_filtration;
    for (const auto& cell : cells) {
        const int op = ops.insert(cell.alpha, cell.beta);
        const std::string name = (forms.length(cell.omega) ? forms.name(cell.omega) + "⊗" : "") + ops.name(op);
        const int g = b.add(name, forms.degree(cell.omega) + ops.degree(op));
        id[{cell.omega, op}] = g;
        level[g] = sum(cell.beta) - sum(cell.omega);
        kmin = std::min(kmin, level[g]);
    }
    for (const auto& [key, src] : id) {
        const auto& [omega, op] = key;
        const bool omega_odd = forms.degree(omega).odd();
        for (std::size_t a = 0; a < nc; ++a) {
            Monomial e(nc, 0);
            e[a] = 1;
            const int ps = forms.product_sign(e, omega);
            if (ps == 0)
                continue;
            Monomial target = omega;
            ++target[a];
            const int sign = ps * ((omega_odd && is_odd(cs[a].s)) ? -1 : 1);
            const Element prod = rs.normal_form(Element::letter(d.partial[a]) * ops.element(op));
            const std::map<int, Rational> terms = ops.decompose(prod);
            for (const auto& [t, c] : terms) {
                auto it = id.find({target, t});
                if (it == id.end())
                    throw Error(ErrorKind::WindowTooSmall, "Ω(D) differential leaves the block");
                b.add_entry(it->second, src, c * sign);
            }
        }
    }

    DeRhamBlock out;
    out.complex = b.build(true, true);
    for (int k = kmin; k <= max_filtration; ++k) {
        std::vector<int> ids;
        for (const auto& [g, lv] : level)
            if (lv <= k)
                ids.push_back(g);
        out.filtration.stages.push_back(b.span(ids));
    }
    return out;
}

BerezinianReport berezinian_check(const DiffOpAlgebra& d, int max_filtration)
{
    std::vector<int> w;
    for (const auto& c : d.space.coordinates)
        w.push_back(is_odd(c.s) ? -1 : 1);
    BerezinianReport r;
    r.table = cohomology(de_rham_of_D(d, w, max_filtration).complex);
    const CohomologyTable next = cohomology(de_rham_of_D(d, w, max_filtration + 1).complex);
    auto nonzero = [](const CohomologyTable& t) {
        CohomologyTable out;
        for (const auto& [deg, n] : t)
            if (n != 0)
                out[deg] = n;
        return out;
    };
    r.table = nonzero(r.table);
    r.stable = r.table == nonzero(next);
    if (r.stable && r.table.size() == 1 && r.table.begin()->second == 1)
        r.degree = r.table.begin()->first;
    return r;
}

linalg::Mat represent(const Element& x, const std::vector<linalg::Mat>& generators, std::size_t n)
{
    linalg::Mat out(n, n);
    for (const auto& [w, c] : x.terms()) {
        linalg::Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] = 1;
        for (int g : w)
            m = linalg::multiply(m, generators[g]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += c * m[i][j];
    }
    return out;
}

bool MoritaReport::pass(int q) const
{
    const std::size_t m = std::size_t{1} << q;
    return relations_hold && dim == m * m && center_dim == 1 && super_center_dim == 1 && module_dim == m && image_dim == m * m;
}

MoritaReport morita_report(int q)
{
    if (q < 0 || q > 3)
        throw Error(ErrorKind::InvalidArgument, "morita_check supports 0 <= q <= 3");
    SuperSpace s;
    for (int i = 1; i <= q; ++i)
        s.coordinates.push_back({"e" + std::to_string(i), 1});
    const DiffOpAlgebra d = weyl_algebra(s);
    const RewriteSystem rs = complete_closed(d.presentation);
    const FiniteAlgebra fa(rs);

    MoritaReport r;
    r.dim = fa.dim();
    r.center_dim = fa.center_dim(false);
    r.super_center_dim = fa.center_dim(true);

    std::vector<SuperVar> vars;
    for (const auto& c : s.coordinates)
        vars.push_back({c.name, {0, 1, 0}});
    const SuperRing lambda(vars);
    const std::vector<Monomial> basis = lambda.monomials_up_to(q);
    r.module_dim = basis.size();
    std::map<Monomial, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i)
        pos[basis[i]] = i;

    const std::size_t n = basis.size();
    std::vector<linalg::Mat> gen(d.presentation.size(), linalg::Mat(n, n));
    for (std::size_t col = 0; col < n; ++col) {
        const SuperPoly v = SuperPoly::monomial(&lambda, basis[col]);
        for (int a = 0; a < q; ++a) {
            const SuperPoly mult = SuperPoly::variable(&lambda, a) * v;
            for (const auto& [m, c] : mult.terms())
                gen[d.coordinate[a]][pos.at(m)][col] += c;
            const SuperPoly der = left_partial(lambda, a, v);
            for (const auto& [m, c] : der.terms())
                gen[d.partial[a]][pos.at(m)][col] += c;
        }
    }
    r.relations_hold = true;
    for (const auto& rel : d.presentation.relations())
        if (!linalg::is_zero(represent(rel, gen, n)))
            r.relations_hold = false;

    linalg::Mat image;
    image.cols = n * n;
    for (const auto& w : fa.basis()) {
        const linalg::Mat wm = represent(Element::word(w), gen, n);
        linalg::Vec flat;
        for (const auto& row : wm.rows)
            flat.insert(flat.end(), row.begin(), row.end());
        image.push_row(std::move(flat));
    }
    r.image_dim = linalg::rank(image);
    return r;
}

bool morita_check(int q) { return morita_report(q).pass(q); }

ComplexWindow koszul_moment_complex(const LieSuperalgebra& g, int max_degree)
{
    if (max_degree < 1)
        throw Error(ErrorKind::WindowTooSmall, "Koszul window needs polynomial degree >= 1");
    std::vector<SuperVar> vars;
    for (const auto& e : g.basis())
        vars.push_back({"y_" + e.name, {-1, e.s, 1}});
    for (const auto& e : g.basis())
        vars.push_back({"z_" + e.name, {0, e.s, 1}});
    const SuperRing ring(vars);
    const std::size_t n = g.dim();
    std::vector<SuperPoly> images;
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(SuperPoly::variable(&ring, n + i));
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(SuperPoly(&ring));

    ComplexBuilder b;
    std::map<Monomial, int> id;
    const std::vector<Monomial> monos = ring.monomials_up_to(max_degree);
    for (const auto& m : monos)
        id[m] = b.add(ring.name(m), ring.degree(m));
    for (const auto& m : monos) {
        const SuperPoly dm = apply_derivation(ring, images, {1, 0, 0}, SuperPoly::monomial(&ring, m));
        for (const auto& [t, c] : dm.terms())
            b.add_entry(id.at(t), id.at(m), c);
    }
    return b.build(-max_degree, 0, true, true);
}

}  // namespace superkoszul
