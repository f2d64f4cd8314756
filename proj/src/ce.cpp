#include "superkoszul/ce.hpp"

#include "superkoszul/error.hpp"

namespace superkoszul {

namespace {

bool parity(int s) { return s % 2 != 0; }

int weight_of(const std::vector<int>& weights, std::size_t i) { return weights.empty() ? 0 : weights[i]; }

linalg::Mat mat_commutator(const linalg::Mat& a, const linalg::Mat& b, int sign)
{
    linalg::Mat ab = linalg::multiply(a, b);
    linalg::Mat ba = linalg::multiply(b, a);
    for (std::size_t i = 0; i < ab.row_count(); ++i)
        for (std::size_t j = 0; j < ab.cols; ++j)
            ab[i][j] -= sign * ba[i][j];
    return ab;
}

// Basis of the monomials of a given length, indexed for lookup.
struct MonomialBasis {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;

    MonomialBasis(const SuperRing& ring, int n)
    {
        monomials = ring.monomials_of_length(n);
        for (std::size_t i = 0; i < monomials.size(); ++i)
            index.emplace(monomials[i], i);
    }
};

}  // namespace

CEModule trivial_module(const LieSuperalgebra& g)
{
    CEModule m;
    m.space = GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}});
    m.action.assign(g.dim(), linalg::Mat(1, 1));
    return m;
}

CEModule adjoint_module(const LieSuperalgebra& g)
{
    CEModule m;
    std::vector<BasisVector> basis;
    for (const auto& b : g.basis())
        basis.push_back({b.name, {0, b.s, 0}});
    m.space = GradedSpace(basis);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        linalg::Mat a(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : g.bracket(static_cast<int>(i), static_cast<int>(j)))
                a[k][j] = c;
        m.action.push_back(std::move(a));
    }
    return m;
}

bool is_module(const LieSuperalgebra& g, const CEModule& m)
{
    const std::size_t n = g.dim();
    if (m.action.size() != n)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < m.space.dim(); ++r)
            for (std::size_t c = 0; c < m.space.dim(); ++c)
                if (m.action[i][r][c] != 0 && m.space[r].degree.s - m.space[c].degree.s != g.s(static_cast<int>(i)))
                    return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int sign = (g.odd(static_cast<int>(i)) && g.odd(static_cast<int>(j))) ? -1 : 1;
            linalg::Mat lhs = mat_commutator(m.action[i], m.action[j], sign);
            for (const auto& [k, c] : g.bracket(static_cast<int>(i), static_cast<int>(j)))
                for (std::size_t r = 0; r < m.space.dim(); ++r)
                    for (std::size_t col = 0; col < m.space.dim(); ++col)
                        lhs[r][col] -= c * m.action[k][r][col];
            if (!linalg::is_zero(lhs))
                return false;
        }
    return true;
}

SuperRing cochain_ring(const LieSuperalgebra& g, const std::vector<int>& weights)
{
    std::vector<SuperVar> vars;
    for (std::size_t i = 0; i < g.dim(); ++i)
        vars.push_back({"x_" + g.basis()[i].name, {1, -g.s(static_cast<int>(i)), -weight_of(weights, i)}, 0});
    return SuperRing(vars);
}

std::vector<SuperPoly> cochain_generator_differentials(const LieSuperalgebra& g, const SuperRing& ring)
{
    const int n = static_cast<int>(g.dim());
    std::vector<SuperPoly> dx(g.dim(), SuperPoly(&ring));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational sign = parity(g.s(i)) ? Rational(1, 2) : Rational(-1, 2);
            SuperPoly xx = SuperPoly::variable(&ring, i) * SuperPoly::variable(&ring, j);
            for (const auto& [k, c] : g.bracket(i, j))
                dx[k] += xx * (sign * c);
        }
    return dx;
}

ComplexWindow cochain_complex(const LieSuperalgebra& g, const CEModule& m, int n_max, const std::vector<int>& weights)
{
    if (!is_module(g, m))
        throw Error(ErrorKind::InvalidArgument, "coefficients are not a g-module");
    SuperRing ring = cochain_ring(g, weights);
    auto dx = cochain_generator_differentials(g, ring);
    ComplexWindow c(0, n_max, true, false);
    std::vector<MonomialBasis> bases;
    for (int n = 0; n <= n_max; ++n) {
        bases.emplace_back(ring, n);
        std::vector<BasisVector> bv;
        for (const auto& mono : bases.back().monomials)
            for (const auto& b : m.space.basis()) {
                if (b.degree.coh != 0)
                    throw Error(ErrorKind::InvalidArgument, "module basis must sit in cohomological degree 0");
                bv.push_back({ring.name(mono) + "|" + b.name, ring.degree(mono) + b.degree});
            }
        c.set_space(n, GradedSpace(bv));
    }
    const std::size_t dm = m.space.dim();
    for (int n = 0; n < n_max; ++n) {
        GradedMap d(c.space(n), c.space(n + 1), {1, 0, 0});
        const auto& src = bases[n];
        const auto& tgt = bases[n + 1];
        for (std::size_t a = 0; a < src.monomials.size(); ++a) {
            SuperPoly omega = SuperPoly::monomial(&ring, src.monomials[a]);
            const bool omega_odd = ring.degree(src.monomials[a]).odd();
            SuperPoly domega = apply_derivation(ring, dx, {1, 0, 0}, omega);
            for (std::size_t mi = 0; mi < dm; ++mi) {
                const int col = static_cast<int>(a * dm + mi);
                for (const auto& [mono, coef] : domega.terms())
                    d.add(static_cast<int>(tgt.index.at(mono) * dm + mi), col, coef);
                const bool pm = m.space[mi].degree.odd();
                for (std::size_t i = 0; i < g.dim(); ++i) {
                    const bool pi = g.odd(static_cast<int>(i));
                    const int sign = (omega_odd != (pi && pm)) ? -1 : 1;
                    SuperPoly ox = omega * SuperPoly::variable(&ring, i);
                    for (std::size_t r = 0; r < dm; ++r) {
                        const Rational& v = m.action[i][r][mi];
                        if (v == 0)
                            continue;
                        for (const auto& [mono, coef] : ox.terms())
                            d.add(static_cast<int>(tgt.index.at(mono) * dm + r), col, sign * coef * v);
                    }
                }
            }
        }
        c.set_differential(n, std::move(d));
    }
    return c;
}

SuperRing chain_ring(const LieSuperalgebra& g, const std::vector<int>& weights)
{
    std::vector<SuperVar> vars;
    for (std::size_t i = 0; i < g.dim(); ++i)
        vars.push_back({"y_" + g.basis()[i].name, {-1, g.s(static_cast<int>(i)), weight_of(weights, i)}, 0});
    return SuperRing(vars);
}

namespace {

Monomial without(const Monomial& m, std::size_t i, std::size_t j)
{
    Monomial r = m;
    --r[i];
    --r[j];
    return r;
}

// Image of one chain monomial under the CE boundary, as a polynomial.
SuperPoly chain_boundary(const LieSuperalgebra& g, const SuperRing& ring, const Monomial& m)
{
    SuperPoly out(&ring);
    auto word = expand(m);
    SuperPoly target = SuperPoly::monomial(&ring, m);
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b) {
            const std::size_t wa = word[a], wb = word[b];
            LieVector br = g.bracket(static_cast<int>(wa), static_cast<int>(wb));
            if (br.empty())
                continue;
            SuperPoly rest = SuperPoly::monomial(&ring, without(m, wa, wb));
            SuperPoly moved = SuperPoly::variable(&ring, wa) * SuperPoly::variable(&ring, wb) * rest;
            Rational eps = moved.terms().at(m);
            if (g.odd(static_cast<int>(wa)))
                eps = -eps;
            for (const auto& [k, c] : br)
                out += SuperPoly::variable(&ring, static_cast<std::size_t>(k)) * rest * (eps * c);
        }
    return out;
}

}  // namespace

ComplexWindow chain_complex(const LieSuperalgebra& g, int n_max, const std::vector<int>& weights)
{
    SuperRing ring = chain_ring(g, weights);
    ComplexWindow c(-n_max, 0, false, true);
    std::vector<MonomialBasis> bases;
    for (int n = 0; n <= n_max; ++n) {
        bases.emplace_back(ring, n);
        std::vector<BasisVector> bv;
        for (const auto& mono : bases.back().monomials)
            bv.push_back({ring.name(mono), ring.degree(mono)});
        c.set_space(-n, GradedSpace(bv));
    }
    for (int n = 1; n <= n_max; ++n) {
        GradedMap d(c.space(-n), c.space(-n + 1), {1, 0, 0});
        for (std::size_t a = 0; a < bases[n].monomials.size(); ++a) {
            SuperPoly img = chain_boundary(g, ring, bases[n].monomials[a]);
            for (const auto& [mono, coef] : img.terms())
                d.add(static_cast<int>(bases[n - 1].index.at(mono)), static_cast<int>(a), coef);
        }
        c.set_differential(-n, std::move(d));
    }
    return c;
}

ConilpotentCoalgebra chain_coalgebra(const LieSuperalgebra& g, int n_max, const std::vector<int>& weights)
{
    SuperRing ring = chain_ring(g, weights);
    ConilpotentCoalgebra c;
    auto monomials = ring.monomials_up_to(n_max);
    std::map<Monomial, int> index;
    std::vector<BasisVector> bv;
    for (const auto& mono : monomials) {
        index.emplace(mono, static_cast<int>(bv.size()));
        bv.push_back({ring.name(mono), ring.degree(mono)});
    }
    c.space = GradedSpace(bv);
    c.unit = index.at(Monomial(ring.size(), 0));
    c.coproduct.resize(monomials.size());
    GradedMap d(c.space, c.space, {1, 0, 0});
    for (std::size_t a = 0; a < monomials.size(); ++a) {
        const Monomial& m = monomials[a];
        auto word = expand(m);
        const std::size_t len = word.size();
        std::map<std::pair<int, int>, Rational> terms;
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            Monomial left(ring.size(), 0), right(ring.size(), 0);
            for (std::size_t k = 0; k < len; ++k)
                ((mask >> k) & 1 ? left : right)[word[k]] += 1;
            SuperPoly prod = SuperPoly::monomial(&ring, left) * SuperPoly::monomial(&ring, right);
            Rational eps = prod.terms().at(m);
            terms[{index.at(left), index.at(right)}] += eps;
        }
        for (const auto& [lr, coef] : terms)
            if (coef != 0)
                c.coproduct[a].push_back({lr.first, lr.second, coef});
        SuperPoly img = chain_boundary(g, ring, m);
        for (const auto& [mono, coef] : img.terms())
            d.add(index.at(mono), static_cast<int>(a), coef);
    }
    c.differential = std::move(d);
    return c;
}

CurvedAlgebra curved_B(const LieSuperalgebra& g)
{
    CurvedAlgebra out;
    Presentation& p = out.presentation;
    const int n = static_cast<int>(g.dim());
    std::vector<int> gen(g.dim(), -1);
    for (int i = 0; i < n; ++i)
        if (!g.odd(i))
            gen[i] = p.add_generator({g.basis()[i].name, {0, g.s(i), 0}, 1, 0});
    for (int a = 0; a < n; ++a)
        if (g.odd(a))
            gen[a] = p.add_generator({"y_" + g.basis()[a].name, {1, -g.s(a), 0}, 0, 0});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.odd(i) != g.odd(j))
                continue;
            Element r = Element::word({gen[i], gen[j]}) - Element::word({gen[j], gen[i]});
            if (!g.odd(i))
                for (const auto& [k, c] : g.bracket(i, j))
                    r.add({gen[k]}, -c);
            p.add_relation(r);
        }
    for (int x = 0; x < n; ++x) {
        if (g.odd(x))
            continue;
        for (int a = 0; a < n; ++a) {
            if (!g.odd(a))
                continue;
            Element r = Element::word({gen[x], gen[a]}) - Element::word({gen[a], gen[x]});
            for (int b = 0; b < n; ++b)
                if (g.odd(b))
                    r.add({gen[b]}, g.constant(x, b, a));
            p.add_relation(r);
        }
    }
    for (int k = 0; k < n; ++k) {
        if (g.odd(k))
            continue;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.odd(a) && g.odd(b))
                    out.curvature.add({gen[k], gen[a], gen[b]}, g.constant(a, b, k) / 2);
    }
    return out;
}

}  // namespace superkoszul
