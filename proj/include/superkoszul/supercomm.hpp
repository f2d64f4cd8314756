#pragma once

#include "superkoszul/graded.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace superkoszul {

/// A variable of a free graded-commutative algebra. Odd total degree makes it
/// exterior; even total degree makes it polynomial.
struct SuperVar {
    std::string name;
    Degree degree;
    int weight = 0;
};

/// Exponent vector in the variable order of the owning ring.
using Monomial = std::vector<int>;

/// Free graded-commutative algebra on finitely many homogeneous variables,
/// with monomials kept in variable order.
class SuperRing {
public:
    SuperRing() = default;
    explicit SuperRing(std::vector<SuperVar> vars);

    std::size_t size() const { return vars_.size(); }
    const SuperVar& var(std::size_t i) const { return vars_[i]; }
    const std::vector<SuperVar>& vars() const { return vars_; }
    bool exterior(std::size_t i) const { return vars_[i].degree.odd(); }
    int index_of(const std::string& name) const;

    Degree degree(const Monomial& m) const;
    int weight(const Monomial& m) const;
    int length(const Monomial& m) const;
    std::string name(const Monomial& m) const;

    /// Sign and validity of the product a·b reordered into canonical form;
    /// returns 0 when an exterior variable repeats.
    int product_sign(const Monomial& a, const Monomial& b) const;

    /// All monomials of the given word length, in a fixed deterministic order.
    std::vector<Monomial> monomials_of_length(int n) const;

    /// All monomials of length at most max_length, shortest first.
    std::vector<Monomial> monomials_up_to(int max_length) const;

    bool operator==(const SuperRing& o) const;

private:
    std::vector<SuperVar> vars_;
};

/// Element of a SuperRing.
class SuperPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    SuperPoly() = default;
    explicit SuperPoly(const SuperRing* ring) : ring_(ring) {}

    static SuperPoly constant(const SuperRing* ring, const Rational& c);
    static SuperPoly variable(const SuperRing* ring, std::size_t i);
    static SuperPoly monomial(const SuperRing* ring, const Monomial& m, const Rational& c = 1);

    const SuperRing* ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& m, const Rational& c);
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    SuperPoly operator+(const SuperPoly& o) const;
    SuperPoly operator-(const SuperPoly& o) const;
    SuperPoly operator*(const SuperPoly& o) const;
    SuperPoly operator*(const Rational& c) const;
    bool operator==(const SuperPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    const SuperRing* ring_ = nullptr;
    Terms terms_;
};

/// Extends images of the variables to a derivation of the given degree:
/// D(ab) = D(a)b + (−1)^{|D||a|} a D(b).
SuperPoly apply_derivation(const SuperRing& ring, const std::vector<SuperPoly>& images, const Degree& deg, const SuperPoly& p);

/// Left partial derivative ∂/∂x_i, a derivation of degree −deg(x_i).
SuperPoly left_partial(const SuperRing& ring, std::size_t i, const SuperPoly& p);

/// Expanded word of variable indices for a monomial, e.g. x0^2 x2 → (0,0,2).
std::vector<std::size_t> expand(const Monomial& m);

}  // namespace superkoszul
