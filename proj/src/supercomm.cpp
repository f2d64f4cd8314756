#include "superkoszul/supercomm.hpp"

#include "superkoszul/error.hpp"

#include <set>

namespace superkoszul {

SuperRing::SuperRing(std::vector<SuperVar> vars) : vars_(std::move(vars))
{
    std::set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v.name).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + v.name + "'");
}

int SuperRing::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

Degree SuperRing::degree(const Monomial& m) const
{
    Degree d;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += vars_[i].degree * m[i];
    return d;
}

int SuperRing::weight(const Monomial& m) const
{
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        w += vars_[i].weight * m[i];
    return w;
}

int SuperRing::length(const Monomial& m) const
{
    int n = 0;
    for (int e : m)
        n += e;
    return n;
}

std::string SuperRing::name(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars_[i].name;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

int SuperRing::product_sign(const Monomial& a, const Monomial& b) const
{
    int sign = 1;
    int odd_in_a_after = 0;
    // Walk from the last variable down so odd_in_a_after counts odd letters of
    // a with a strictly larger index than the current letter of b.
    for (std::size_t k = vars_.size(); k-- > 0;) {
        if (!exterior(k))
            continue;
        if (b[k] != 0) {
            if (a[k] != 0)
                return 0;
            if (odd_in_a_after % 2 != 0)
                sign = -sign;
        }
        odd_in_a_after += a[k];
    }
    return sign;
}

std::vector<Monomial> SuperRing::monomials_of_length(int n) const
{
    std::vector<Monomial> out;
    Monomial cur(vars_.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == vars_.size()) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        int cap = exterior(i) ? std::min(left, 1) : left;
        for (int e = cap; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (n >= 0)
        rec(0, n);
    return out;
}

std::vector<Monomial> SuperRing::monomials_up_to(int max_length) const
{
    std::vector<Monomial> out;
    for (int n = 0; n <= max_length; ++n) {
        auto part = monomials_of_length(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool SuperRing::operator==(const SuperRing& o) const
{
    if (vars_.size() != o.vars_.size())
        return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].degree != o.vars_[i].degree || vars_[i].weight != o.vars_[i].weight)
            return false;
    return true;
}

SuperPoly SuperPoly::constant(const SuperRing* ring, const Rational& c)
{
    SuperPoly p(ring);
    p.add(Monomial(ring->size(), 0), c);
    return p;
}

SuperPoly SuperPoly::variable(const SuperRing* ring, std::size_t i)
{
    Monomial m(ring->size(), 0);
    m[i] = 1;
    return monomial(ring, m);
}

SuperPoly SuperPoly::monomial(const SuperRing* ring, const Monomial& m, const Rational& c)
{
    SuperPoly p(ring);
    p.add(m, c);
    return p;
}

void SuperPoly::add(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o)
{
    if (!ring_)
        ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o)
{
    if (!ring_)
        ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const
{
    SuperPoly r = *this;
    r += o;
    return r;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const
{
    SuperPoly r = *this;
    r -= o;
    return r;
}

SuperPoly SuperPoly::operator*(const SuperPoly& o) const
{
    const SuperRing* ring = ring_ ? ring_ : o.ring_;
    SuperPoly r(ring);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            int sign = ring->product_sign(a, b);
            if (sign == 0)
                continue;
            Monomial m(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                m[i] = a[i] + b[i];
            r.add(m, sign > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    return r;
}

SuperPoly SuperPoly::operator*(const Rational& c) const
{
    SuperPoly r(ring_);
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

std::string SuperPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += superkoszul::to_string(c) + "*" + ring_->name(m);
    }
    return out;
}

std::vector<std::size_t> expand(const Monomial& m)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k)
            out.push_back(i);
    return out;
}

SuperPoly apply_derivation(const SuperRing& ring, const std::vector<SuperPoly>& images, const Degree& deg, const SuperPoly& p)
{
    SuperPoly out(&ring);
    const std::size_t n = ring.size();
    for (const auto& [m, c] : p.terms()) {
        Degree prefix_deg;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0)
                continue;
            if (!images[i].is_zero()) {
                Monomial pre(n, 0), mid(n, 0), post(n, 0);
                for (std::size_t k = 0; k < i; ++k)
                    pre[k] = m[k];
                mid[i] = m[i] - 1;
                for (std::size_t k = i + 1; k < n; ++k)
                    post[k] = m[k];
                Rational coef = c * m[i] * koszul_sign(deg, prefix_deg);
                SuperPoly term = SuperPoly::monomial(&ring, pre, coef) * SuperPoly::monomial(&ring, mid) * images[i] * SuperPoly::monomial(&ring, post);
                out += term;
            }
            prefix_deg += ring.var(i).degree * m[i];
        }
    }
    return out;
}

SuperPoly left_partial(const SuperRing& ring, std::size_t i, const SuperPoly& p)
{
    std::vector<SuperPoly> images(ring.size(), SuperPoly(&ring));
    images[i] = SuperPoly::constant(&ring, 1);
    return apply_derivation(ring, images, -ring.var(i).degree, p);
}

}  // namespace superkoszul
