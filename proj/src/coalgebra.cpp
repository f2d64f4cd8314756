#include "superkoszul/coalgebra.hpp"

namespace superkoszul {

namespace {

using Tensor2 = std::map<std::pair<int, int>, Rational>;
using Tensor3 = std::map<std::tuple<int, int, int>, Rational>;

template <class K>
void accumulate(std::map<K, Rational>& t, const K& k, const Rational& c)
{
    if (c == 0)
        return;
    Rational& slot = t[k];
    slot += c;
    if (slot == 0)
        t.erase(k);
}

std::vector<std::vector<std::pair<int, Rational>>> columns(const ConilpotentCoalgebra& c)
{
    std::vector<std::vector<std::pair<int, Rational>>> cols(c.space.dim());
    if (c.differential)
        for (const auto& [rc, v] : c.differential->entries())
            cols[rc.second].push_back({rc.first, v});
    return cols;
}

}  // namespace

std::vector<CoproductTerm> ConilpotentCoalgebra::reduced(int i) const
{
    std::vector<CoproductTerm> out;
    for (const auto& t : coproduct[i])
        if (t.left != unit && t.right != unit)
            out.push_back(t);
    return out;
}

bool coassociative(const ConilpotentCoalgebra& c)
{
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
        Tensor3 left, right;
        for (const auto& t : c.coproduct[i]) {
            for (const auto& u : c.coproduct[t.left])
                accumulate(left, {u.left, u.right, t.right}, t.coef * u.coef);
            for (const auto& u : c.coproduct[t.right])
                accumulate(right, {t.left, u.left, u.right}, t.coef * u.coef);
        }
        if (left != right)
            return false;
    }
    return true;
}

bool counit_laws(const ConilpotentCoalgebra& c)
{
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
        std::map<int, Rational> left, right;
        for (const auto& t : c.coproduct[i]) {
            if (t.left == c.unit)
                accumulate(left, t.right, t.coef);
            if (t.right == c.unit)
                accumulate(right, t.left, t.coef);
        }
        std::map<int, Rational> expected{{static_cast<int>(i), Rational(1)}};
        if (left != expected || right != expected)
            return false;
    }
    return true;
}

std::optional<int> conilpotency_index(const ConilpotentCoalgebra& c, int max_n)
{
    int worst = 0;
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
        if (static_cast<int>(i) == c.unit)
            continue;
        std::map<std::vector<int>, Rational> cur{{{static_cast<int>(i)}, Rational(1)}};
        int n = 0;
        while (!cur.empty()) {
            if (n >= max_n)
                return std::nullopt;
            std::map<std::vector<int>, Rational> next;
            for (const auto& [word, coef] : cur)
                for (const auto& t : c.reduced(word.back())) {
                    std::vector<int> w(word.begin(), word.end() - 1);
                    w.push_back(t.left);
                    w.push_back(t.right);
                    accumulate(next, w, coef * t.coef);
                }
            cur = std::move(next);
            ++n;
        }
        worst = std::max(worst, n);
    }
    return worst;
}

bool is_coderivation(const ConilpotentCoalgebra& c)
{
    auto d = columns(c);
    if (!d[c.unit].empty())
        return false;
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
        Tensor2 lhs, rhs;
        for (const auto& [r, v] : d[i])
            for (const auto& t : c.coproduct[r])
                accumulate(lhs, {t.left, t.right}, v * t.coef);
        for (const auto& t : c.coproduct[i]) {
            for (const auto& [r, v] : d[t.left])
                accumulate(rhs, {r, t.right}, v * t.coef);
            const int sign = c.space[t.left].degree.odd() ? -1 : 1;
            for (const auto& [r, v] : d[t.right])
                accumulate(rhs, {t.left, r}, sign * v * t.coef);
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

ConilpotentCoalgebra dual_numbers(const Degree& eps)
{
    ConilpotentCoalgebra c;
    c.space = GradedSpace({{"1", {}}, {"eps", eps}});
    c.unit = 0;
    c.coproduct = {{{0, 0, 1}}, {{1, 0, 1}, {0, 1, 1}}};
    return c;
}

ConilpotentCoalgebra trivial_coalgebra()
{
    ConilpotentCoalgebra c;
    c.space = GradedSpace(std::vector<BasisVector>{BasisVector{"1", {}}});
    c.unit = 0;
    c.coproduct = {{{0, 0, 1}}};
    return c;
}

}  // namespace superkoszul
