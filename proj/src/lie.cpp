#include "superkoszul/lie.hpp"

#include "superkoszul/error.hpp"

#include <set>

namespace superkoszul {

namespace {

int sign_of(int si, int sj) { return ((si % 2 != 0) && (sj % 2 != 0)) ? -1 : 1; }

void add_into(LieVector& v, int k, const Rational& c)
{
    if (c == 0)
        return;
    Rational& slot = v[k];
    slot += c;
    if (slot == 0)
        v.erase(k);
}

std::string unit_name(std::size_t i, std::size_t j, std::size_t d, char letter)
{
    if (d < 10)
        return std::string(1, letter) + std::to_string(i + 1) + std::to_string(j + 1);
    return std::string(1, letter) + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

std::vector<int> expand_shape(const std::vector<std::pair<int, int>>& shape)
{
    std::vector<int> degrees;
    for (const auto& [s, mult] : shape) {
        if (mult < 1)
            throw Error(ErrorKind::InvalidArgument, "multiplicity must be positive");
        for (int k = 0; k < mult; ++k)
            degrees.push_back(s);
    }
    return degrees;
}

linalg::Mat unit(std::size_t d, std::size_t i, std::size_t j)
{
    linalg::Mat m(d, d);
    m[i][j] = 1;
    return m;
}

linalg::Mat supercommutator(const linalg::Mat& a, int sa, const linalg::Mat& b, int sb)
{
    linalg::Mat ab = linalg::multiply(a, b);
    linalg::Mat ba = linalg::multiply(b, a);
    const int sign = sign_of(sa, sb);
    for (std::size_t i = 0; i < ab.row_count(); ++i)
        for (std::size_t j = 0; j < ab.cols; ++j)
            ab[i][j] -= sign * ba[i][j];
    return ab;
}

// Structure constants of the span of linearly independent matrices, assumed
// closed under the super-commutator.
LieSuperalgebra from_matrices(std::vector<LieBasisElement> basis, std::vector<linalg::Mat> mats, std::vector<int> v_degrees)
{
    const std::size_t n = basis.size();
    const std::size_t d = v_degrees.size();
    linalg::Mat columns(d * d, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                columns[r * d + c][k] = mats[k][r][c];
    LieSuperalgebra g(basis);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            linalg::Mat br = supercommutator(mats[i], basis[i].s, mats[j], basis[j].s);
            linalg::Vec flat(d * d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    flat[r * d + c] = br[r][c];
            auto coords = linalg::solve(columns, flat);
            if (!coords)
                throw Error(ErrorKind::InvalidArgument, "matrix span is not closed under the bracket");
            LieVector v;
            for (std::size_t k = 0; k < n; ++k)
                add_into(v, static_cast<int>(k), (*coords)[k]);
            g.set_bracket(static_cast<int>(i), static_cast<int>(j), v);
        }
    g.set_realization({std::move(v_degrees), std::move(mats)});
    return g;
}

}  // namespace

LieSuperalgebra::LieSuperalgebra(std::vector<LieBasisElement> basis) : basis_(std::move(basis))
{
    std::set<std::string> seen;
    for (const auto& b : basis_)
        if (!seen.insert(b.name).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate basis name '" + b.name + "'");
}

int LieSuperalgebra::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

void LieSuperalgebra::set_bracket(int i, int j, const LieVector& value)
{
    for (const auto& [k, c] : value)
        if (c != 0 && basis_[k].s != basis_[i].s + basis_[j].s)
            throw Error(ErrorKind::InvalidArgument, "bracket [" + basis_[i].name + "," + basis_[j].name + "] breaks degree additivity");
    LieVector clean;
    for (const auto& [k, c] : value)
        add_into(clean, k, c);
    if (i == j && !odd(i) && !clean.empty())
        throw Error(ErrorKind::InvalidArgument, "even element with nonzero self-bracket");
    if (i > j) {
        const int sign = -sign_of(basis_[i].s, basis_[j].s);
        for (auto& [k, c] : clean)
            c *= sign;
        std::swap(i, j);
    }
    if (clean.empty())
        upper_.erase({i, j});
    else
        upper_[{i, j}] = clean;
}

LieVector LieSuperalgebra::bracket(int i, int j) const
{
    if (i <= j) {
        auto it = upper_.find({i, j});
        return it == upper_.end() ? LieVector{} : it->second;
    }
    LieVector v = bracket(j, i);
    const int sign = -sign_of(basis_[i].s, basis_[j].s);
    for (auto& [k, c] : v)
        c *= sign;
    return v;
}

Rational LieSuperalgebra::constant(int i, int j, int k) const
{
    LieVector v = bracket(i, j);
    auto it = v.find(k);
    return it == v.end() ? Rational(0) : it->second;
}

LieVector LieSuperalgebra::bracket(const LieVector& x, const LieVector& y) const
{
    LieVector out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : bracket(i, j))
                add_into(out, k, a * b * c);
    return out;
}

LieSuperalgebra LieSuperalgebra::renamed(const std::vector<std::string>& names) const
{
    if (names.size() != basis_.size())
        throw Error(ErrorKind::InvalidArgument, "rename needs one name per basis element");
    LieSuperalgebra g = *this;
    for (std::size_t i = 0; i < names.size(); ++i)
        g.basis_[i].name = names[i];
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw Error(ErrorKind::InvalidArgument, "duplicate basis name in rename");
    return g;
}

std::vector<JacobiViolation> jacobi_check(const LieSuperalgebra& g)
{
    std::vector<JacobiViolation> out;
    const int n = static_cast<int>(g.dim());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                LieVector va{{a, 1}}, vb{{b, 1}}, vc{{c, 1}};
                LieVector lhs = g.bracket(g.bracket(va, vb), vc);
                LieVector r1 = g.bracket(va, g.bracket(vb, vc));
                LieVector r2 = g.bracket(vb, g.bracket(va, vc));
                const int sign = sign_of(g.s(a), g.s(b));
                for (const auto& [k, v] : r1)
                    add_into(lhs, k, -v);
                for (const auto& [k, v] : r2)
                    add_into(lhs, k, sign * v);
                if (!lhs.empty())
                    out.push_back({g.basis()[a].name, g.basis()[b].name, g.basis()[c].name});
            }
    return out;
}

LieSuperalgebra gl(const std::vector<std::pair<int, int>>& shape)
{
    std::vector<int> vd = expand_shape(shape);
    const std::size_t d = vd.size();
    std::vector<LieBasisElement> basis;
    std::vector<linalg::Mat> mats;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            basis.push_back({unit_name(i, j, d, 'E'), vd[j] - vd[i]});
            mats.push_back(unit(d, i, j));
        }
    return from_matrices(std::move(basis), std::move(mats), std::move(vd));
}

LieSuperalgebra sl(const std::vector<std::pair<int, int>>& shape)
{
    std::vector<int> vd = expand_shape(shape);
    const std::size_t d = vd.size();
    std::vector<LieBasisElement> basis;
    std::vector<linalg::Mat> mats;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) {
                basis.push_back({unit_name(i, j, d, 'E'), vd[j] - vd[i]});
                mats.push_back(unit(d, i, j));
            }
    for (std::size_t i = 0; i + 1 < d; ++i) {
        linalg::Mat m = unit(d, i, i);
        m[i + 1][i + 1] = -sign_of(vd[i] - vd[i + 1], 1);
        basis.push_back({"H" + std::to_string(i + 1), 0});
        mats.push_back(std::move(m));
    }
    return from_matrices(std::move(basis), std::move(mats), std::move(vd));
}

LieSuperalgebra sl11() { return sl({{0, 1}, {1, 1}}).renamed({"e", "f", "h"}); }

Rational supertrace(const linalg::Mat& m, const std::vector<int>& v_degrees)
{
    Rational tr = 0;
    for (std::size_t i = 0; i < v_degrees.size(); ++i)
        tr += sign_of(v_degrees[i], 1) * m[i][i];
    return tr;
}

bool is_closed(const LieSuperalgebra& g, const SubalgebraSpec& sub)
{
    std::set<int> members(sub.members.begin(), sub.members.end());
    for (int a : sub.members)
        for (int b : sub.members)
            for (const auto& [k, c] : g.bracket(a, b))
                if (!members.count(k))
                    return false;
    return true;
}

std::pair<SubalgebraSpec, SubalgebraSpec> borel_and_nilradical(const LieSuperalgebra& g, const std::vector<int>& order)
{
    if (!g.realization())
        throw Error(ErrorKind::InvalidArgument, "borel_and_nilradical needs a matrix-realized algebra");
    const auto& real = *g.realization();
    const std::size_t d = real.v_degrees.size();
    if (order.size() != d)
        throw Error(ErrorKind::InvalidArgument, "order must list every basis vector of V");
    std::vector<std::size_t> pos(d);
    for (std::size_t k = 0; k < d; ++k)
        pos[static_cast<std::size_t>(order[k])] = k;
    SubalgebraSpec borel, nil;
    for (std::size_t x = 0; x < g.dim(); ++x) {
        const auto& m = real.matrices[x];
        bool upper = true, strict = true;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (m[i][j] == 0)
                    continue;
                if (pos[i] > pos[j])
                    upper = false;
                if (pos[i] >= pos[j])
                    strict = false;
            }
        if (upper)
            borel.members.push_back(static_cast<int>(x));
        if (strict)
            nil.members.push_back(static_cast<int>(x));
    }
    return {borel, nil};
}

Presentation universal_enveloping(const LieSuperalgebra& g)
{
    Presentation p;
    for (const auto& b : g.basis())
        p.add_generator({b.name, {0, b.s, 0}, 1, 0});
    const int n = static_cast<int>(g.dim());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && !g.odd(i))
                continue;
            Element r = Element::word({i, j}) - Element::word({j, i}) * Rational(sign_of(g.s(i), g.s(j)));
            for (const auto& [k, c] : g.bracket(i, j))
                r.add({k}, -c);
            if (!r.is_zero())
                p.add_relation(r);
        }
    p.commutation_shortcut = true;
    return p;
}

std::vector<long> pbw_dimensions(const LieSuperalgebra& g, int n)
{
    std::vector<long> dims(static_cast<std::size_t>(n + 1), 0);
    dims[0] = 1;
    for (std::size_t x = 0; x < g.dim(); ++x) {
        if (g.odd(static_cast<int>(x))) {
            for (int k = n; k >= 1; --k)
                dims[k] += dims[k - 1];
        } else {
            for (int k = 1; k <= n; ++k)
                dims[k] += dims[k - 1];
        }
    }
    return dims;
}

bool pbw_check(const LieSuperalgebra& g, int n)
{
    auto rs = complete(universal_enveloping(g), 2 * n + 2);
    auto table = hilbert(rs, Grading::WordLength, n);
    auto expected = pbw_dimensions(g, n);
    for (int k = 0; k <= n; ++k)
        if (table[k] != expected[k])
            return false;
    return true;
}

}  // namespace superkoszul
