#include "superkoszul/koszul.hpp"

#include "superkoszul/error.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace superkoszul {

namespace {

const Degree cobar_shift{1, 0, 0};

int slot_value(const Degree& d, Slot s) { return s == Slot::S ? d.s : d.h; }

std::string power_name(const std::string& base, int k)
{
    if (k == 0)
        return "";
    return k == 1 ? base : base + "^" + std::to_string(k);
}

std::string word_name(const ConilpotentCoalgebra& c, const std::vector<int>& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "|" : "") + c.space[w[i]].name;
    return out + "]";
}

Degree word_degree(const ConilpotentCoalgebra& c, const std::vector<int>& w)
{
    Degree d;
    for (int x : w)
        d += c.space[x].degree + cobar_shift;
    return d;
}

using WordTerms = std::map<std::vector<int>, Rational>;

void accumulate(WordTerms& t, const std::vector<int>& w, const Rational& c)
{
    if (c == 0)
        return;
    Rational& slot = t[w];
    slot += c;
    if (slot == 0)
        t.erase(w);
}

// Images d[c] of the cobar generators, as words of length one and two.
std::vector<WordTerms> generator_differentials(const ConilpotentCoalgebra& c, bool internal)
{
    std::vector<WordTerms> out(c.space.dim());
    if (internal && c.differential)
        for (const auto& [rc, v] : c.differential->entries()) {
            if (rc.second == c.unit)
                continue;
            if (rc.first == c.unit)
                throw Error(ErrorKind::InvalidArgument, "coalgebra differential hits the coaugmentation");
            accumulate(out[rc.second], {rc.first}, -v);
        }
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
        if (static_cast<int>(i) == c.unit)
            continue;
        for (const auto& t : c.reduced(static_cast<int>(i)))
            accumulate(out[i], {t.left, t.right}, c.space[t.left].degree.odd() ? -t.coef : t.coef);
    }
    return out;
}

WordTerms word_differential(const ConilpotentCoalgebra& c, const std::vector<WordTerms>& gen_d, const std::vector<int>& w)
{
    WordTerms out;
    bool odd = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const auto& [img, coef] : gen_d[w[i]]) {
            std::vector<int> nw(w.begin(), w.begin() + i);
            nw.insert(nw.end(), img.begin(), img.end());
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            accumulate(out, nw, odd ? -coef : coef);
        }
        odd ^= (c.space[w[i]].degree + cobar_shift).odd();
    }
    return out;
}

std::vector<int> reduced_weights(const ConilpotentCoalgebra& c, const Truncation& t)
{
    std::vector<int> w(c.space.dim());
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
        w[i] = slot_value(c.space[i].degree, t.slot);
        if (static_cast<int>(i) != c.unit && w[i] < 1)
            throw Error(ErrorKind::InvalidArgument, "reduced element " + c.space[i].name + " has non-positive window weight");
    }
    if (!conilpotency_index(c, t.max_weight + 1))
        throw Error(ErrorKind::ConilpotencyFailure, "iterated reduced coproduct does not vanish within the window");
    return w;
}

// All cobar words of total weight ≤ max, shortest first.
std::vector<std::vector<int>> cobar_words(const ConilpotentCoalgebra& c, const std::vector<int>& weight, int max)
{
    std::vector<std::vector<int>> out{{}};
    std::vector<std::pair<std::vector<int>, int>> layer{{{}, 0}};
    while (!layer.empty()) {
        std::vector<std::pair<std::vector<int>, int>> next;
        for (const auto& [w, total] : layer)
            for (std::size_t i = 0; i < c.space.dim(); ++i) {
                if (static_cast<int>(i) == c.unit || total + weight[i] > max)
                    continue;
                auto nw = w;
                nw.push_back(static_cast<int>(i));
                out.push_back(nw);
                next.push_back({nw, total + weight[i]});
            }
        layer = std::move(next);
    }
    return out;
}

}  // namespace

int FilteredComplex::min_level() const
{
    int m = INT_MAX;
    for (const auto& [n, lv] : level)
        for (int p : lv)
            m = std::min(m, p);
    return m;
}

int FilteredComplex::max_level() const
{
    int m = INT_MIN;
    for (const auto& [n, lv] : level)
        for (int p : lv)
            m = std::max(m, p);
    return m;
}

bool is_filtered(const FilteredComplex& v)
{
    for (int n = v.complex.lo(); n < v.complex.hi(); ++n) {
        const GradedMap d = v.complex.differential(n);
        for (const auto& [rc, c] : d.entries())
            if (v.level_of(n + 1, rc.first) > v.level_of(n, rc.second))
                return false;
    }
    return true;
}

HModule rees_module(const FilteredComplex& v, int h_max)
{
    if (!is_filtered(v))
        throw Error(ErrorKind::InvalidArgument, "differential does not preserve the filtration");
    const ComplexWindow& c = v.complex;
    ComplexBuilder b;
    std::map<std::tuple<int, int, int>, int> id;
    for (int n = c.lo(); n <= c.hi(); ++n)
        for (std::size_t i = 0; i < c.space(n).dim(); ++i) {
            const BasisVector& x = c.space(n)[i];
            const int lv = v.level_of(n, static_cast<int>(i));
            for (int p = lv; p <= h_max; ++p) {
                const std::string name = p == lv ? x.name : "(" + power_name("h", p - lv) + ")" + x.name;
                id[{n, static_cast<int>(i), p}] = b.add(name, x.degree + Degree{0, 0, p});
            }
        }
    for (int n = c.lo(); n < c.hi(); ++n) {
        const GradedMap d = c.differential(n);
        for (const auto& [rc, val] : d.entries())
            for (int p = v.level_of(n, rc.second); p <= h_max; ++p)
                b.add_entry(id.at({n + 1, rc.first, p}), id.at({n, rc.second, p}), val);
    }
    HModule out;
    out.complex = b.build(c.lo(), c.hi(), c.bounded_below(), c.bounded_above());
    for (int n = c.lo(); n <= c.hi(); ++n) {
        GradedMap h(out.complex.space(n), out.complex.space(n), {0, 0, 1});
        for (const auto& [key, src] : id) {
            auto [m, i, p] = key;
            if (m != n)
                continue;
            auto it = id.find({n, i, p + 1});
            if (it != id.end())
                h.add(b.local(it->second), b.local(src), 1);
        }
        out.h_action.emplace(n, std::move(h));
    }
    return out;
}

ComplexWindow rees(const FilteredComplex& v, int h_max) { return rees_module(v, h_max).complex; }

ComplexWindow associated_graded(const FilteredComplex& v)
{
    const ComplexWindow& c = v.complex;
    ComplexBuilder b;
    std::map<std::pair<int, int>, int> id;
    for (int n = c.lo(); n <= c.hi(); ++n)
        for (std::size_t i = 0; i < c.space(n).dim(); ++i)
            id[{n, static_cast<int>(i)}] = b.add(c.space(n)[i].name, c.space(n)[i].degree + Degree{0, 0, v.level_of(n, static_cast<int>(i))});
    for (int n = c.lo(); n < c.hi(); ++n) {
        const GradedMap d = c.differential(n);
        for (const auto& [rc, val] : d.entries())
            if (v.level_of(n + 1, rc.first) == v.level_of(n, rc.second))
                b.add_entry(id.at({n + 1, rc.first}), id.at({n, rc.second}), val);
    }
    return b.build(c.lo(), c.hi(), c.bounded_below(), c.bounded_above());
}

ComplexWindow corees(const FilteredComplex& v, int i_min, int i_max)
{
    if (!is_filtered(v))
        throw Error(ErrorKind::InvalidArgument, "differential does not preserve the filtration");
    const ComplexWindow& c = v.complex;
    ComplexBuilder b;
    std::map<std::tuple<int, int, int>, int> id;
    for (int i = i_min; i <= i_max; ++i)
        for (int n = c.lo(); n <= c.hi(); ++n)
            for (std::size_t k = 0; k < c.space(n).dim(); ++k)
                if (v.level_of(n, static_cast<int>(k)) > i)
                    id[{i, n, static_cast<int>(k)}] = b.add("[" + c.space(n)[k].name + "]_" + std::to_string(i), c.space(n)[k].degree + Degree{0, 0, i});
    for (int i = i_min; i <= i_max; ++i)
        for (int n = c.lo(); n < c.hi(); ++n) {
            const GradedMap d = c.differential(n);
            for (const auto& [rc, val] : d.entries()) {
                auto src = id.find({i, n, rc.second});
                auto tgt = id.find({i, n + 1, rc.first});
                if (src != id.end() && tgt != id.end())
                    b.add_entry(tgt->second, src->second, val);
            }
        }
    return b.build(c.lo(), c.hi(), c.bounded_below(), c.bounded_above());
}

CobarWindow reduced_cobar(const ConilpotentCoalgebra& c, const Truncation& t, bool internal)
{
    auto weight = reduced_weights(c, t);
    auto gen_d = generator_differentials(c, internal);
    auto words = cobar_words(c, weight, t.max_weight);
    ComplexBuilder b;
    std::map<std::vector<int>, int> id;
    for (const auto& w : words)
        id[w] = b.add(word_name(c, w), word_degree(c, w));
    for (const auto& w : words)
        for (const auto& [img, coef] : word_differential(c, gen_d, w))
            b.add_entry(id.at(img), id.at(w), coef);
    CobarWindow out;
    out.complex = b.build(true, true);
    for (const auto& w : words)
        out.words[word_degree(c, w).coh].push_back(w);
    return out;
}

ComplexWindow twisted_tensor(const ConilpotentCoalgebra& c, const Truncation& t, bool internal)
{
    auto weight = reduced_weights(c, t);
    auto gen_d = generator_differentials(c, internal);
    auto words = cobar_words(c, weight, t.max_weight);
    std::vector<int> word_weight;
    for (const auto& w : words) {
        int s = 0;
        for (int x : w)
            s += weight[x];
        word_weight.push_back(s);
    }
    ComplexBuilder b;
    std::map<std::pair<int, std::vector<int>>, int> id;
    for (std::size_t x = 0; x < c.space.dim(); ++x)
        for (std::size_t k = 0; k < words.size(); ++k) {
            const int wx = static_cast<int>(x) == c.unit ? 0 : weight[x];
            if (wx + word_weight[k] > t.max_weight)
                continue;
            id[{static_cast<int>(x), words[k]}] = b.add(c.space[x].name + "⊗" + word_name(c, words[k]), c.space[x].degree + word_degree(c, words[k]));
        }
    std::vector<std::vector<std::pair<int, Rational>>> dc(c.space.dim());
    if (internal && c.differential)
        for (const auto& [rc, v] : c.differential->entries())
            dc[rc.second].push_back({rc.first, v});
    for (const auto& [key, src] : id) {
        const auto& [x, w] = key;
        const bool x_odd = c.space[x].degree.odd();
        for (const auto& [r, v] : dc[x])
            b.add_entry(id.at({r, w}), src, v);
        for (const auto& [img, coef] : word_differential(c, gen_d, w))
            b.add_entry(id.at({x, img}), src, x_odd ? -coef : coef);
        for (const auto& term : c.coproduct[x]) {
            if (term.right == c.unit)
                continue;
            std::vector<int> nw{term.right};
            nw.insert(nw.end(), w.begin(), w.end());
            b.add_entry(id.at({term.left, nw}), src, c.space[term.left].degree.odd() ? term.coef : -term.coef);
        }
    }
    return b.build(true, true);
}

ConilpotentCoalgebra odd_line_forms(int max_s, bool de_rham)
{
    ConilpotentCoalgebra c;
    std::vector<BasisVector> basis;
    std::map<std::pair<int, int>, int> id;
    for (int s = 0; s <= max_s; ++s)
        for (int a = 0; a <= std::min(1, s); ++a) {
            const int k = s - a;
            std::string name = power_name("eps", a);
            if (k)
                name += (a ? "*" : "") + power_name("deps", k);
            id[{a, k}] = static_cast<int>(basis.size());
            basis.push_back({name.empty() ? "1" : name, Degree{0, 1, 0} * a + Degree{1, 1, 0} * k});
        }
    c.space = GradedSpace(basis);
    c.unit = id.at({0, 0});
    c.coproduct.resize(basis.size());
    for (const auto& [ak, i] : id) {
        const auto [a, k] = ak;
        Rational binom = 1;
        for (int j = 0; j <= k; ++j) {
            c.coproduct[i].push_back({id.at({a, j}), id.at({0, k - j}), binom});
            if (a)
                c.coproduct[i].push_back({id.at({0, j}), id.at({1, k - j}), binom});
            binom = binom * (k - j) / (j + 1);
        }
    }
    if (de_rham) {
        GradedMap d(c.space, c.space, {1, 0, 0});
        for (const auto& [ak, i] : id)
            if (ak.first == 1)
                d.add(id.at({0, ak.second + 1}), i, 1);
        c.differential = std::move(d);
    }
    return c;
}

FilteredComplex odd_line_forms_filtered(int max_s)
{
    auto forms = odd_line_forms(max_s, true);
    ComplexBuilder b;
    std::vector<int> levels;
    for (const auto& x : forms.space.basis()) {
        b.add(x.name, x.degree);
        levels.push_back(-x.degree.coh);
    }
    for (const auto& [rc, v] : forms.differential->entries())
        b.add_entry(rc.first, rc.second, v);
    FilteredComplex out;
    out.complex = b.build(true, true);
    for (std::size_t i = 0; i < b.size(); ++i)
        out.level[b.vector(static_cast<int>(i)).degree.coh].push_back(levels[i]);
    return out;
}

bool is_comodule(const DualNumbersComodule& m)
{
    const ComplexWindow& c = m.complex;
    auto delta = [&](int n) {
        auto it = m.delta.find(n);
        return it == m.delta.end() ? GradedMap(c.space(n), c.space(n + 1), {1, 0, -1}) : it->second;
    };
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (!compose(delta(n + 1), delta(n)).is_zero())
            return false;
        std::map<std::pair<int, int>, Rational> anti;
        const GradedMap after = compose(delta(n + 1), c.differential(n));
        const GradedMap before = compose(c.differential(n + 1), delta(n));
        for (const auto& [rc, v] : after.entries())
            anti[rc] += v;
        for (const auto& [rc, v] : before.entries())
            anti[rc] += v;
        for (const auto& [rc, v] : anti)
            if (v != 0)
                return false;
    }
    return true;
}

ConeWitness counit_cone(const HModule& nmod, int h_max)
{
    const ComplexWindow& n = nmod.complex;
    const Degree shift{-1, 0, 0};
    const Degree eps{-1, 0, 1};
    ComplexBuilder b;
    std::map<std::pair<int, int>, int> nid;
    std::map<std::tuple<int, int, int>, int> one, ep;
    std::vector<int> g0, g1;
    for (int k = n.lo(); k <= n.hi(); ++k)
        for (std::size_t i = 0; i < n.space(k).dim(); ++i) {
            const BasisVector& x = n.space(k)[i];
            const int ii = static_cast<int>(i);
            for (int p = 0; x.degree.h + p <= h_max; ++p) {
                const std::string r = p ? power_name("h", p) + "⊗" : "1⊗";
                int a = b.add(r + "1⊗" + x.name, x.degree + Degree{0, 0, p} + shift);
                one[{k, ii, p}] = a;
                g1.push_back(a);
                if (x.degree.h + p + 1 <= h_max) {
                    int e = b.add(r + "eps⊗" + x.name, x.degree + Degree{0, 0, p} + eps + shift);
                    ep[{k, ii, p}] = e;
                    g0.push_back(e);
                    g1.push_back(e);
                }
            }
            if (x.degree.h <= h_max)
                nid[{k, ii}] = b.add(x.name, x.degree);
        }
    auto h_power = [&](int k, int i, int p) {
        std::map<int, Rational> v{{i, Rational(1)}};
        for (int s = 0; s < p && !v.empty(); ++s) {
            std::map<int, Rational> next;
            for (const auto& [rc, c] : nmod.h_action.at(k).entries())
                if (v.count(rc.second))
                    next[rc.first] += c * v.at(rc.second);
            v = std::move(next);
        }
        return v;
    };
    for (int k = n.lo(); k <= n.hi(); ++k) {
        const GradedMap dn = n.differential(k);
        for (const auto& [rc, v] : dn.entries()) {
            auto s = nid.find({k, rc.second});
            if (s != nid.end())
                b.add_entry(nid.at({k + 1, rc.first}), s->second, v);
            for (const auto& [key, src] : one)
                if (std::get<0>(key) == k && std::get<1>(key) == rc.second)
                    b.add_entry(one.at({k + 1, rc.first, std::get<2>(key)}), src, -v);
            for (const auto& [key, src] : ep)
                if (std::get<0>(key) == k && std::get<1>(key) == rc.second)
                    b.add_entry(ep.at({k + 1, rc.first, std::get<2>(key)}), src, v);
        }
    }
    for (const auto& [key, src] : ep) {
        auto [k, i, p] = key;
        b.add_entry(one.at({k, i, p + 1}), src, -1);
        for (const auto& [j, c] : h_power(k, i, 1))
            b.add_entry(one.at({k, j, p}), src, c);
    }
    for (const auto& [key, src] : one) {
        auto [k, i, p] = key;
        for (const auto& [j, c] : h_power(k, i, p)) {
            auto t = nid.find({k, j});
            if (t != nid.end())
                b.add_entry(t->second, src, c);
        }
    }
    ConeWitness out;
    out.cone = b.build(n.lo() - 2, n.hi(), n.bounded_below(), n.bounded_above());
    out.stages.staircase = true;
    out.stages.stages = {b.span(g0), b.span(g1)};
    return out;
}

ConeWitness unit_cone(const DualNumbersComodule& mod, int h_max)
{
    const ComplexWindow& m = mod.complex;
    const Degree shift{-1, 0, 0};
    const Degree eps{-1, 0, 1};
    ComplexBuilder b;
    std::map<std::pair<int, int>, int> mid;
    std::map<std::tuple<int, int, int>, int> one, ep;
    std::map<int, std::vector<int>> by_q;
    for (int q = m.lo(); q <= m.hi(); ++q)
        for (std::size_t i = 0; i < m.space(q).dim(); ++i) {
            const BasisVector& x = m.space(q)[i];
            const int ii = static_cast<int>(i);
            if (x.degree.h > h_max)
                continue;
            by_q[q].push_back(mid[{q, ii}] = b.add(x.name, x.degree + shift));
            for (int p = 0; x.degree.h + p <= h_max; ++p) {
                const std::string r = p ? power_name("h", p) : "1";
                by_q[q].push_back(one[{q, ii, p}] = b.add("1⊗" + r + "⊗" + x.name, x.degree + Degree{0, 0, p}));
                if (x.degree.h + p + 1 <= h_max)
                    by_q[q].push_back(ep[{q, ii, p}] = b.add("eps⊗" + r + "⊗" + x.name, x.degree + Degree{0, 0, p} + eps));
            }
        }
    auto delta = [&](int q) {
        auto it = mod.delta.find(q);
        return it == mod.delta.end() ? GradedMap(m.space(q), m.space(q + 1), {1, 0, -1}) : it->second;
    };
    for (int q = m.lo(); q <= m.hi(); ++q) {
        const GradedMap dm = m.differential(q);
        const GradedMap dl = delta(q);
        auto link = [&](auto& table, int i, int p, int j, int q2, int p2, const Rational& c) {
            auto s = table.find({q, i, p});
            auto t = table.find({q2, j, p2});
            if (s != table.end() && t != table.end())
                b.add_entry(t->second, s->second, c);
        };
        for (const auto& [rc, v] : dm.entries()) {
            auto s = mid.find({q, rc.second});
            if (s != mid.end())
                b.add_entry(mid.at({q + 1, rc.first}), s->second, -v);
            for (int p = 0; p <= h_max; ++p) {
                link(one, rc.second, p, rc.first, q + 1, p, v);
                link(ep, rc.second, p, rc.first, q + 1, p, -v);
            }
        }
        for (const auto& [rc, v] : dl.entries()) {
            for (int p = 0; p <= h_max; ++p) {
                link(one, rc.second, p, rc.first, q + 1, p + 1, v);
                link(ep, rc.second, p, rc.first, q + 1, p + 1, -v);
            }
            auto s = mid.find({q, rc.second});
            auto t = ep.find({q + 1, rc.first, 0});
            if (s != mid.end() && t != ep.end())
                b.add_entry(t->second, s->second, -v);
        }
    }
    for (const auto& [key, src] : ep) {
        auto [q, i, p] = key;
        auto t = one.find({q, i, p + 1});
        if (t != one.end())
            b.add_entry(t->second, src, 1);
    }
    for (const auto& [key, src] : mid)
        b.add_entry(one.at({key.first, key.second, 0}), src, 1);
    ConeWitness out;
    out.cone = b.build(m.lo() - 1, m.hi(), m.bounded_below(), m.bounded_above());
    std::vector<int> acc;
    for (auto it = by_q.rbegin(); it != by_q.rend(); ++it) {
        acc.insert(acc.end(), it->second.begin(), it->second.end());
        out.stages.stages.push_back(b.span(acc));
    }
    return out;
}

namespace {

// Applies the derivation of degree `deg` with images `img` of the
// generators to an element, with Koszul signs against the prefix.
Element apply_derivation(const Presentation& p, const std::vector<Element>& img, const Degree& deg, const Element& x)
{
    Element out;
    for (const auto& [w, c] : x.terms()) {
        Degree prefix;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Element left = Element::word(Word(w.begin(), w.begin() + i), c * koszul_sign(deg, prefix));
            Element right = Element::word(Word(w.begin() + i + 1, w.end()));
            out += left * img[w[i]] * right;
            prefix += p.generators()[w[i]].degree;
        }
    }
    return out;
}

}  // namespace

DgPresentation relative_cobar(const Presentation& a, const std::vector<Element>& delta, int bound)
{
    if (delta.size() != a.size())
        throw Error(ErrorKind::InvalidArgument, "coaction must be given on every generator");
    const Degree delta_degree{1, 0, -1};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& [w, c] : delta[i].terms())
            if (a.degree(w) != a.generators()[i].degree + delta_degree)
                throw Error(ErrorKind::CoactionNotMultiplicative, "coaction of " + a.generators()[i].name + " is not homogeneous of degree (1,0,-1)");
    RewriteSystem rs = complete(a, bound);
    for (const auto& r : a.relations())
        if (!rs.normal_form(apply_derivation(a, delta, delta_degree, r)).is_zero())
            throw Error(ErrorKind::CoactionNotMultiplicative, "relation " + a.to_string(r) + " is not preserved");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rs.normal_form(apply_derivation(a, delta, delta_degree, delta[i])).is_zero())
            throw Error(ErrorKind::CoactionNotMultiplicative, "coaction is not coassociative on " + a.generators()[i].name);
    DgPresentation out;
    out.algebra = a;
    const int t = out.algebra.add_generator({cobar_eps, {0, 0, 1}, 0, 0});
    for (int g = 0; g < t; ++g)
        out.algebra.add_relation(Element::word({t, g}) - Element::word({g, t}));
    for (std::size_t i = 0; i < a.size(); ++i)
        out.differential.push_back(delta[i] * Element::letter(t));
    out.differential.push_back(Element());
    return out;
}

bool squares_to_zero(const DgPresentation& a, const RewriteSystem& rs)
{
    const Degree d{1, 0, 0};
    for (const auto& img : a.differential)
        if (!rs.normal_form(apply_derivation(a.algebra, a.differential, d, img)).is_zero())
            return false;
    for (const auto& r : a.algebra.relations())
        if (!rs.normal_form(apply_derivation(a.algebra, a.differential, d, r)).is_zero())
            return false;
    return true;
}

}  // namespace superkoszul
