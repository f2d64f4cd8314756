#pragma once

#include "superkoszul/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superkoszul {

/// Multidegree carried by every basis vector and generator.
///
/// `coh` is the cohomological degree, `s` the super degree and `h` the
/// filtration (Rees) degree. Signs only ever see the total degree coh + s;
/// the h component is sign-inert.
struct Degree {
    int coh = 0;
    int s = 0;
    int h = 0;

    constexpr int total() const { return coh + s; }
    constexpr bool odd() const { return ((coh + s) % 2) != 0; }

    constexpr Degree operator+(const Degree& o) const { return {coh + o.coh, s + o.s, h + o.h}; }
    constexpr Degree operator-(const Degree& o) const { return {coh - o.coh, s - o.s, h - o.h}; }
    constexpr Degree operator-() const { return {-coh, -s, -h}; }
    constexpr Degree& operator+=(const Degree& o)
    {
        coh += o.coh;
        s += o.s;
        h += o.h;
        return *this;
    }
    constexpr Degree operator*(int n) const { return {coh * n, s * n, h * n}; }

    constexpr auto operator<=>(const Degree&) const = default;
};

std::string to_string(const Degree& d);

/// (-1)^{(coh1+s1)(coh2+s2)}.
constexpr int koszul_sign(const Degree& a, const Degree& b)
{
    return (a.odd() && b.odd()) ? -1 : 1;
}

constexpr int parity_sign(bool odd) { return odd ? -1 : 1; }

struct BasisVector {
    std::string name;
    Degree degree;
};

/// Finite graded vector space over the rationals, given by an ordered basis.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BasisVector> basis);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    const BasisVector& operator[](std::size_t i) const { return basis_[i]; }

    /// Index of a basis vector by name, or -1.
    int index_of(const std::string& name) const;

    std::map<Degree, int> dims_by_degree() const;

    bool operator==(const GradedSpace& o) const;

private:
    std::vector<BasisVector> basis_;
};

/// Sparse homogeneous linear map. Entry (row, col) maps source basis `col`
/// to target basis `row`.
class GradedMap {
public:
    GradedMap(GradedSpace source, GradedSpace target, Degree degree);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    const Degree& degree() const { return degree_; }
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    /// Adds to an entry; throws if it breaks homogeneity.
    void add(int row, int col, const Rational& value);
    Rational at(int row, int col) const;

    /// Image of a coordinate vector in the source basis.
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_zero() const { return entries_.empty(); }

    friend GradedMap compose(const GradedMap& after, const GradedMap& before);
    bool operator==(const GradedMap& o) const;

private:
    GradedSpace source_;
    GradedSpace target_;
    Degree degree_;
    std::map<std::pair<int, int>, Rational> entries_;
};

GradedMap identity_map(const GradedSpace& v);

enum class ShiftKind { Cohomological, Super, Tate };

/// Degree bookkeeping for V[n], V<n> and the Tate twist V(n):
/// V[n]^i = V^{n+i}, V<n>_i = V_{i+n}, F_p V(n) = F_{p+n} V.
GradedSpace shift(const GradedSpace& v, ShiftKind kind, int n);

/// Tensor product with basis "a|b" ordered lexicographically (first factor
/// major).
GradedSpace tensor(const GradedSpace& v, const GradedSpace& w);

/// The symmetry V⊗W → W⊗V with Koszul signs.
GradedMap braiding(const GradedSpace& v, const GradedSpace& w);

/// Returns V⊗W together with σ_{V,W}.
std::pair<GradedSpace, GradedMap> tensor_with_braiding(const GradedSpace& v, const GradedSpace& w);

}  // namespace superkoszul
