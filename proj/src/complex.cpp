#include "superkoszul/complex.hpp"

#include "superkoszul/error.hpp"
#include "superkoszul/parallel.hpp"

#include <algorithm>
#include <climits>

namespace superkoszul {

namespace {

InternalDegree internal(const Degree& d) { return {d.s, d.h}; }

const Degree coboundary_degree{1, 0, 0};

linalg::Mat rows_of(std::size_t cols)
{
    linalg::Mat m;
    m.cols = cols;
    return m;
}

std::size_t rank_of(const Subcomplex& a, int n, std::size_t cols)
{
    auto it = a.find(n);
    if (it == a.end())
        return 0;
    linalg::Mat m = it->second;
    m.cols = cols;
    return linalg::rank(m);
}

linalg::Mat get(const Subcomplex& a, int n, std::size_t cols)
{
    auto it = a.find(n);
    if (it == a.end())
        return rows_of(cols);
    linalg::Mat m = it->second;
    m.cols = cols;
    return m;
}

}  // namespace

ComplexWindow::ComplexWindow(int lo, int hi, bool bounded_below, bool bounded_above)
    : lo_(lo), hi_(hi), bounded_below_(bounded_below), bounded_above_(bounded_above)
{
    for (int n = lo; n <= hi; ++n)
        spaces_.emplace(n, GradedSpace());
}

void ComplexWindow::set_space(int n, GradedSpace v)
{
    if (n < lo_ || n > hi_)
        throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(n) + " outside the window");
    for (const auto& b : v.basis())
        if (b.degree.coh != n)
            throw Error(ErrorKind::InvalidArgument, "basis vector " + b.name + " has cohomological degree " + std::to_string(b.degree.coh) + " in C^" + std::to_string(n));
    spaces_[n] = std::move(v);
}

void ComplexWindow::set_differential(int n, GradedMap d)
{
    if (n < lo_ || n + 1 > hi_)
        throw Error(ErrorKind::InvalidArgument, "differential out of degree " + std::to_string(n) + " leaves the window");
    if (d.degree() != coboundary_degree)
        throw Error(ErrorKind::InvalidArgument, "differential must have degree (1,0,0)");
    if (!(d.source() == spaces_.at(n)) || !(d.target() == spaces_.at(n + 1)))
        throw Error(ErrorKind::InvalidArgument, "differential does not match the window spaces");
    d_.insert_or_assign(n, std::move(d));
}

const GradedSpace& ComplexWindow::space(int n) const
{
    static const GradedSpace empty;
    auto it = spaces_.find(n);
    return it == spaces_.end() ? empty : it->second;
}

GradedMap ComplexWindow::differential(int n) const
{
    auto it = d_.find(n);
    if (it != d_.end())
        return it->second;
    return GradedMap(space(n), space(n + 1), coboundary_degree);
}

bool ComplexWindow::is_interior(int n) const
{
    if (n < lo_ || n > hi_)
        return false;
    if (n == lo_ && !bounded_below_)
        return false;
    if (n == hi_ && !bounded_above_)
        return false;
    return true;
}

std::vector<int> ComplexWindow::interior() const
{
    std::vector<int> out;
    for (int n = lo_; n <= hi_; ++n)
        if (is_interior(n))
            out.push_back(n);
    return out;
}

linalg::Mat ComplexWindow::matrix(int n) const
{
    GradedMap d = differential(n);
    linalg::Mat m(d.target().dim(), d.source().dim());
    for (const auto& [rc, v] : d.entries())
        m[rc.first][rc.second] = v;
    return m;
}

bool verify_differential(const ComplexWindow& c)
{
    for (int n = c.lo(); n + 2 <= c.hi(); ++n)
        if (c.has_differential(n) && c.has_differential(n + 1) && !compose(c.differential(n + 1), c.differential(n)).is_zero())
            return false;
    return true;
}

int ComplexBuilder::add(const std::string& name, const Degree& degree)
{
    vectors_.push_back({name, degree});
    local_.push_back(count_[degree.coh]++);
    return static_cast<int>(vectors_.size()) - 1;
}

void ComplexBuilder::add_entry(int target, int source, const Rational& c)
{
    if (c == 0)
        return;
    Rational& slot = entries_[{target, source}];
    slot += c;
    if (slot == 0)
        entries_.erase({target, source});
}

ComplexWindow ComplexBuilder::build(bool bounded_below, bool bounded_above) const
{
    if (count_.empty())
        return build(0, 0, bounded_below, bounded_above);
    return build(count_.begin()->first, count_.rbegin()->first, bounded_below, bounded_above);
}

ComplexWindow ComplexBuilder::build(int lo, int hi, bool bounded_below, bool bounded_above) const
{
    if (!count_.empty()) {
        lo = std::min(lo, count_.begin()->first);
        hi = std::max(hi, count_.rbegin()->first);
    }
    ComplexWindow out(lo, hi, bounded_below, bounded_above);
    std::map<int, std::vector<BasisVector>> basis;
    for (const auto& v : vectors_)
        basis[v.degree.coh].push_back(v);
    for (auto& [n, bv] : basis)
        out.set_space(n, GradedSpace(std::move(bv)));
    std::map<int, GradedMap> ds;
    for (int n = lo; n < hi; ++n)
        ds.emplace(n, GradedMap(out.space(n), out.space(n + 1), coboundary_degree));
    for (const auto& [ts, c] : entries_) {
        const int n = vectors_[ts.second].degree.coh;
        if (vectors_[ts.first].degree.coh != n + 1)
            throw Error(ErrorKind::InvalidArgument, "differential entry from " + vectors_[ts.second].name + " to " + vectors_[ts.first].name + " is not of degree (1,0,0)");
        ds.at(n).add(local_[ts.first], local_[ts.second], c);
    }
    for (auto& [n, d] : ds)
        out.set_differential(n, std::move(d));
    return out;
}

Subcomplex ComplexBuilder::span(const std::vector<int>& ids) const
{
    Subcomplex out;
    for (int id : ids) {
        const int n = vectors_[id].degree.coh;
        auto it = out.find(n);
        if (it == out.end())
            it = out.emplace(n, rows_of(static_cast<std::size_t>(count_.at(n)))).first;
        linalg::Vec row(it->second.cols);
        row[local_[id]] = 1;
        it->second.push_row(std::move(row));
    }
    return out;
}

namespace {

// Rank of d^n restricted to one internal-degree block.
std::size_t block_rank(const ComplexWindow& c, int n, const InternalDegree& block)
{
    GradedMap d = c.differential(n);
    std::map<int, std::size_t> rows, cols;
    for (std::size_t i = 0; i < d.source().dim(); ++i)
        if (internal(d.source()[i].degree) == block)
            cols.emplace(static_cast<int>(i), cols.size());
    for (std::size_t i = 0; i < d.target().dim(); ++i)
        if (internal(d.target()[i].degree) == block)
            rows.emplace(static_cast<int>(i), rows.size());
    if (rows.empty() || cols.empty())
        return 0;
    linalg::Mat m(rows.size(), cols.size());
    for (const auto& [rc, v] : d.entries()) {
        auto r = rows.find(rc.first);
        auto col = cols.find(rc.second);
        if (r != rows.end() && col != cols.end())
            m[r->second][col->second] = v;
    }
    return linalg::rank(m);
}

}  // namespace

CohomologyTable cohomology(const ComplexWindow& c, int n)
{
    if (!c.is_interior(n))
        throw Error(ErrorKind::WindowTooSmall, "degree " + std::to_string(n) + " is not interior to the window [" + std::to_string(c.lo()) + "," + std::to_string(c.hi()) + "]");
    std::map<InternalDegree, int> dims;
    for (const auto& b : c.space(n).basis())
        ++dims[internal(b.degree)];
    std::vector<std::pair<InternalDegree, int>> blocks(dims.begin(), dims.end());
    std::vector<int> result(blocks.size());
    parallel_for(blocks.size(), [&](std::size_t k) {
        const auto& [blk, dim] = blocks[k];
        result[k] = dim - static_cast<int>(block_rank(c, n, blk)) - static_cast<int>(block_rank(c, n - 1, blk));
    });
    CohomologyTable out;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (result[k] != 0)
            out[{n, blocks[k].first.s, blocks[k].first.h}] = result[k];
    return out;
}

CohomologyTable cohomology(const ComplexWindow& c)
{
    CohomologyTable out;
    for (int n : c.interior())
        for (const auto& [d, v] : cohomology(c, n))
            out[d] = v;
    return out;
}

std::map<InternalDegree, long> euler_characteristic(const ComplexWindow& c)
{
    std::map<InternalDegree, long> out;
    for (int n = c.lo(); n <= c.hi(); ++n)
        for (const auto& b : c.space(n).basis())
            out[internal(b.degree)] += (n % 2 == 0) ? 1 : -1;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<InternalDegree, long> euler_characteristic(const CohomologyTable& t)
{
    std::map<InternalDegree, long> out;
    for (const auto& [d, v] : t)
        out[internal(d)] += (d.coh % 2 == 0) ? v : -v;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

int total_at(const CohomologyTable& t, int n)
{
    int sum = 0;
    for (const auto& [d, v] : t)
        if (d.coh == n)
            sum += v;
    return sum;
}

Subcomplex whole(const ComplexWindow& c)
{
    Subcomplex out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::size_t dim = c.space(n).dim();
        linalg::Mat m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            m[i][i] = 1;
        out[n] = std::move(m);
    }
    return out;
}

Subcomplex image(const ComplexWindow& c, const Subcomplex& a)
{
    Subcomplex out;
    for (const auto& [n, rows] : a) {
        if (n + 1 > c.hi())
            continue;
        GradedMap d = c.differential(n);
        linalg::Mat img = rows_of(c.space(n + 1).dim());
        for (const auto& r : rows.rows)
            img.push_row(d.apply(r));
        out[n + 1] = std::move(img);
    }
    return out;
}

Subcomplex sum(const ComplexWindow& c, const Subcomplex& a, const Subcomplex& b)
{
    Subcomplex out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::size_t dim = c.space(n).dim();
        linalg::Mat m = get(a, n, dim);
        for (const auto& r : get(b, n, dim).rows)
            m.push_row(r);
        if (m.row_count())
            out[n] = std::move(m);
    }
    return out;
}

bool contains(const ComplexWindow& c, const Subcomplex& outer, const Subcomplex& inner)
{
    for (const auto& [n, rows] : inner) {
        const std::size_t dim = c.space(n).dim();
        linalg::Mat o = get(outer, n, dim);
        linalg::Mat i = rows;
        i.cols = dim;
        if (linalg::stacked_rank(o, i) != linalg::rank(o))
            return false;
    }
    return true;
}

std::map<int, int> subquotient_cohomology(const ComplexWindow& c, const Subcomplex& a, const Subcomplex& b)
{
    auto reduced_rank = [&](int n) -> long {
        // rank of d̄: A_n/B_n → C_{n+1}/B_{n+1}
        if (n < c.lo() || n + 1 > c.hi())
            return 0;
        const std::size_t dim1 = c.space(n + 1).dim();
        Subcomplex an;
        an[n] = get(a, n, c.space(n).dim());
        linalg::Mat img = get(image(c, an), n + 1, dim1);
        linalg::Mat bn1 = get(b, n + 1, dim1);
        return static_cast<long>(linalg::stacked_rank(img, bn1)) - static_cast<long>(linalg::rank(bn1));
    };
    std::map<int, int> out;
    for (int n : c.interior()) {
        const std::size_t dim = c.space(n).dim();
        long q = static_cast<long>(rank_of(a, n, dim)) - static_cast<long>(rank_of(b, n, dim));
        long h = q - reduced_rank(n) - reduced_rank(n - 1);
        out[n] = static_cast<int>(h);
    }
    return out;
}

bool staircase_contractibility(const ComplexWindow& c, const FiltrationData& g)
{
    const std::size_t k = g.stages.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (!contains(c, g.stages[i + 1], g.stages[i]) || !contains(c, g.stages[i + 1], image(c, g.stages[i])))
            throw Error(ErrorKind::NotAStaircase, "stage " + std::to_string(i) + " violates d(G_i) ⊆ G_{i+1}");
    }
    std::vector<Subcomplex> tilde;
    for (const auto& stage : g.stages)
        tilde.push_back(sum(c, stage, image(c, stage)));
    for (const auto& t : tilde)
        if (!contains(c, t, image(c, t)))
            return false;
    Subcomplex previous;
    for (const auto& t : tilde) {
        for (const auto& [n, h] : subquotient_cohomology(c, t, previous))
            if (h != 0)
                return false;
        previous = t;
    }
    for (const auto& [n, h] : subquotient_cohomology(c, whole(c), previous))
        if (h != 0)
            return false;
    return true;
}

ComplexWindow totalize(const Bicomplex& b, bool bounded_below, bool bounded_above)
{
    if (b.spaces.empty())
        return ComplexWindow(0, 0, bounded_below, bounded_above);
    int lo = INT_MAX, hi = INT_MIN;
    for (const auto& [pq, v] : b.spaces) {
        lo = std::min(lo, pq.first + pq.second);
        hi = std::max(hi, pq.first + pq.second);
    }
    ComplexWindow out(lo, hi, bounded_below, bounded_above);
    // Offsets of each (p,q) block inside the total space.
    std::map<std::pair<int, int>, std::size_t> offset;
    std::map<int, std::vector<BasisVector>> basis;
    for (const auto& [pq, v] : b.spaces) {
        auto& bv = basis[pq.first + pq.second];
        offset[pq] = bv.size();
        for (const auto& x : v.basis())
            bv.push_back({"(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")" + x.name, x.degree});
    }
    for (auto& [n, bv] : basis)
        out.set_space(n, GradedSpace(bv));
    for (int n = lo; n < hi; ++n) {
        GradedMap d(out.space(n), out.space(n + 1), coboundary_degree);
        for (const auto& [pq, m] : b.horizontal) {
            if (pq.first + pq.second != n || !b.spaces.count({pq.first + 1, pq.second}))
                continue;
            for (const auto& [rc, v] : m.entries())
                d.add(static_cast<int>(offset.at({pq.first + 1, pq.second})) + rc.first, static_cast<int>(offset.at(pq)) + rc.second, v);
        }
        for (const auto& [pq, m] : b.vertical) {
            if (pq.first + pq.second != n || !b.spaces.count({pq.first, pq.second + 1}))
                continue;
            const int sign = (pq.first % 2 == 0) ? 1 : -1;
            for (const auto& [rc, v] : m.entries())
                d.add(static_cast<int>(offset.at({pq.first, pq.second + 1})) + rc.first, static_cast<int>(offset.at(pq)) + rc.second, sign * v);
        }
        out.set_differential(n, std::move(d));
    }
    if (!verify_differential(out))
        throw Error(ErrorKind::SignIncoherence, "totalized differential does not square to zero");
    return out;
}

ComplexWindow cone(const ComplexWindow& c, const ComplexWindow& d, const std::map<int, GradedMap>& f)
{
    const int lo = std::min(c.lo() - 1, d.lo());
    const int hi = std::max(c.hi() - 1, d.hi());
    ComplexWindow out(lo, hi, c.bounded_below() && d.bounded_below(), c.bounded_above() && d.bounded_above());
    for (int n = lo; n <= hi; ++n) {
        std::vector<BasisVector> bv;
        for (const auto& x : c.space(n + 1).basis())
            bv.push_back({"c:" + x.name, x.degree - coboundary_degree});
        for (const auto& x : d.space(n).basis())
            bv.push_back({"d:" + x.name, x.degree});
        out.set_space(n, GradedSpace(bv));
    }
    for (int n = lo; n < hi; ++n) {
        GradedMap m(out.space(n), out.space(n + 1), coboundary_degree);
        const int cn = static_cast<int>(c.space(n + 1).dim());
        const int cn1 = static_cast<int>(c.space(n + 2).dim());
        const GradedMap dc = c.differential(n + 1);
        for (const auto& [rc, v] : dc.entries())
            m.add(rc.first, rc.second, -v);
        auto it = f.find(n + 1);
        if (it != f.end())
            for (const auto& [rc, v] : it->second.entries())
                m.add(cn1 + rc.first, rc.second, v);
        const GradedMap dd = d.differential(n);
        for (const auto& [rc, v] : dd.entries())
            m.add(cn1 + rc.first, cn + rc.second, v);
        out.set_differential(n, std::move(m));
    }
    return out;
}

}  // namespace superkoszul
