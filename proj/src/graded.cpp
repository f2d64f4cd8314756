#include "superkoszul/graded.hpp"

#include "superkoszul/error.hpp"

#include <set>

namespace superkoszul {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::WeightIncompatibleRelation: return "WeightIncompatibleRelation";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::SignIncoherence: return "SignIncoherence";
    case ErrorKind::NotAStaircase: return "NotAStaircase";
    case ErrorKind::ConilpotencyFailure: return "ConilpotencyFailure";
    case ErrorKind::CoactionNotMultiplicative: return "CoactionNotMultiplicative";
    case ErrorKind::RelationFailure: return "RelationFailure";
    case ErrorKind::CompositeNonzero: return "CompositeNonzero";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw Error(ErrorKind::Parse, "bad rational '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Degree& d)
{
    return "(" + std::to_string(d.coh) + "," + std::to_string(d.s) + "," + std::to_string(d.h) + ")";
}

GradedSpace::GradedSpace(std::vector<BasisVector> basis) : basis_(std::move(basis))
{
    std::set<std::string> seen;
    for (const auto& b : basis_)
        if (!seen.insert(b.name).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate basis name '" + b.name + "'");
}

int GradedSpace::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

std::map<Degree, int> GradedSpace::dims_by_degree() const
{
    std::map<Degree, int> out;
    for (const auto& b : basis_)
        ++out[b.degree];
    return out;
}

bool GradedSpace::operator==(const GradedSpace& o) const
{
    if (basis_.size() != o.basis_.size())
        return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name != o.basis_[i].name || basis_[i].degree != o.basis_[i].degree)
            return false;
    return true;
}

GradedMap::GradedMap(GradedSpace source, GradedSpace target, Degree degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree)
{
}

void GradedMap::add(int row, int col, const Rational& value)
{
    if (value == 0)
        return;
    if (target_[row].degree - source_[col].degree != degree_)
        throw Error(ErrorKind::InvalidArgument, "inhomogeneous entry " + source_[col].name + " -> " + target_[row].name);
    auto key = std::make_pair(row, col);
    Rational& slot = entries_[key];
    slot += value;
    if (slot == 0)
        entries_.erase(key);
}

Rational GradedMap::at(int row, int col) const
{
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Rational> GradedMap::apply(const std::vector<Rational>& v) const
{
    std::vector<Rational> out(target_.dim());
    for (const auto& [rc, val] : entries_)
        if (v[rc.second] != 0)
            out[rc.first] += val * v[rc.second];
    return out;
}

GradedMap compose(const GradedMap& after, const GradedMap& before)
{
    GradedMap out(before.source_, after.target_, after.degree_ + before.degree_);
    std::map<int, std::vector<std::pair<int, Rational>>> by_row;
    for (const auto& [rc, val] : after.entries_)
        by_row[rc.second].push_back({rc.first, val});
    for (const auto& [rc, val] : before.entries_) {
        auto it = by_row.find(rc.first);
        if (it == by_row.end())
            continue;
        for (const auto& [row, v2] : it->second)
            out.add(row, rc.second, v2 * val);
    }
    return out;
}

bool GradedMap::operator==(const GradedMap& o) const
{
    return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ && entries_ == o.entries_;
}

GradedMap identity_map(const GradedSpace& v)
{
    GradedMap id(v, v, {});
    for (std::size_t i = 0; i < v.dim(); ++i)
        id.add(static_cast<int>(i), static_cast<int>(i), 1);
    return id;
}

GradedSpace shift(const GradedSpace& v, ShiftKind kind, int n)
{
    std::vector<BasisVector> basis = v.basis();
    for (auto& b : basis) {
        switch (kind) {
        case ShiftKind::Cohomological: b.degree.coh -= n; break;
        case ShiftKind::Super: b.degree.s -= n; break;
        case ShiftKind::Tate: b.degree.h -= n; break;
        }
    }
    return GradedSpace(std::move(basis));
}

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w)
{
    std::vector<BasisVector> basis;
    basis.reserve(v.dim() * w.dim());
    for (const auto& a : v.basis())
        for (const auto& b : w.basis())
            basis.push_back({a.name + "|" + b.name, a.degree + b.degree});
    return GradedSpace(std::move(basis));
}

GradedMap braiding(const GradedSpace& v, const GradedSpace& w)
{
    GradedMap sigma(tensor(v, w), tensor(w, v), {});
    const int nw = static_cast<int>(w.dim());
    const int nv = static_cast<int>(v.dim());
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nw; ++j)
            sigma.add(j * nv + i, i * nw + j, koszul_sign(v[i].degree, w[j].degree));
    return sigma;
}

std::pair<GradedSpace, GradedMap> tensor_with_braiding(const GradedSpace& v, const GradedSpace& w)
{
    return {tensor(v, w), braiding(v, w)};
}

}  // namespace superkoszul
