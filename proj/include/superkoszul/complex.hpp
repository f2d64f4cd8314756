#pragma once

#include "superkoszul/graded.hpp"
#include "superkoszul/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superkoszul {

/// Degree with the cohomological component dropped; blocks of a complex.
struct InternalDegree {
    int s = 0;
    int h = 0;
    auto operator<=>(const InternalDegree&) const = default;
};

using CohomologyTable = std::map<Degree, int>;

/// Subspace data per cohomological degree: rows are coordinate vectors in
/// the basis of C^n. A missing degree means the zero subspace.
using Subcomplex = std::map<int, linalg::Mat>;

/// A finite window of a cochain complex: spaces C^n for n in [lo, hi] and
/// differentials C^n → C^{n+1} of degree (1,0,0). Every basis vector of C^n
/// has cohomological degree n. Cohomology is only reported at interior
/// degrees: those strictly inside the window, plus an end the complex is
/// known not to extend past.
class ComplexWindow {
public:
    ComplexWindow() = default;
    ComplexWindow(int lo, int hi, bool bounded_below, bool bounded_above);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool bounded_below() const { return bounded_below_; }
    bool bounded_above() const { return bounded_above_; }

    void set_space(int n, GradedSpace v);
    /// Differential out of C^n; both spaces must already be set.
    void set_differential(int n, GradedMap d);

    const GradedSpace& space(int n) const;
    /// Differential out of C^n, or a zero map when outside the window.
    GradedMap differential(int n) const;
    bool has_differential(int n) const { return d_.count(n) != 0; }

    bool is_interior(int n) const;
    std::vector<int> interior() const;

    /// Dense matrix of d^n (rows = target basis, columns = source basis).
    linalg::Mat matrix(int n) const;

private:
    int lo_ = 0;
    int hi_ = -1;
    bool bounded_below_ = false;
    bool bounded_above_ = false;
    std::map<int, GradedSpace> spaces_;
    std::map<int, GradedMap> d_;
};

bool verify_differential(const ComplexWindow& c);

/// Assembles a window from basis vectors of mixed cohomological degree and
/// sparse differential entries given on global ids.
class ComplexBuilder {
public:
    int add(const std::string& name, const Degree& degree);
    /// Accumulates c · target into d(source).
    void add_entry(int target, int source, const Rational& c);

    std::size_t size() const { return vectors_.size(); }
    const BasisVector& vector(int id) const { return vectors_[id]; }
    /// Index of a global id inside its C^n, in insertion order.
    int local(int id) const { return local_[id]; }

    /// Window spanning the occurring degrees (or [lo, hi] when wider).
    ComplexWindow build(bool bounded_below, bool bounded_above) const;
    ComplexWindow build(int lo, int hi, bool bounded_below, bool bounded_above) const;

    /// Subcomplex spanned by a set of global ids.
    Subcomplex span(const std::vector<int>& ids) const;

private:
    std::vector<BasisVector> vectors_;
    std::vector<int> local_;
    std::map<int, int> count_;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// Cohomology dimensions per Degree at an interior degree n; throws
/// WindowTooSmall otherwise.
CohomologyTable cohomology(const ComplexWindow& c, int n);

/// Cohomology at every interior degree.
CohomologyTable cohomology(const ComplexWindow& c);

/// Σ_n (−1)^n dim by internal degree, over the whole window.
std::map<InternalDegree, long> euler_characteristic(const ComplexWindow& c);
std::map<InternalDegree, long> euler_characteristic(const CohomologyTable& t);

/// Total dimension of a table at one cohomological degree.
int total_at(const CohomologyTable& t, int n);


/// The whole complex as a Subcomplex.
Subcomplex whole(const ComplexWindow& c);

/// Image of a subcomplex under d.
Subcomplex image(const ComplexWindow& c, const Subcomplex& a);
Subcomplex sum(const ComplexWindow& c, const Subcomplex& a, const Subcomplex& b);
bool contains(const ComplexWindow& c, const Subcomplex& outer, const Subcomplex& inner);

/// Total cohomology dimensions of A/B for subcomplexes B ⊆ A, at degrees
/// interior to the window.
std::map<int, int> subquotient_cohomology(const ComplexWindow& c, const Subcomplex& a, const Subcomplex& b);

/// Increasing flag of subcomplexes (or of a staircase, d(G_i) ⊆ G_{i+1}).
struct FiltrationData {
    std::vector<Subcomplex> stages;
    bool staircase = false;
};

/// Builds G̃_i = G_i + d(G_i), checks they are subcomplexes and that every
/// successive quotient, including C/G̃_last, is acyclic in the window.
bool staircase_contractibility(const ComplexWindow& c, const FiltrationData& g);

/// Double complex window: spaces at (p, q) with basis vectors of
/// cohomological degree p + q, horizontal d: (p,q) → (p+1,q) and vertical
/// d: (p,q) → (p,q+1), squares commuting.
struct Bicomplex {
    std::map<std::pair<int, int>, GradedSpace> spaces;
    std::map<std::pair<int, int>, GradedMap> horizontal;
    std::map<std::pair<int, int>, GradedMap> vertical;
};

/// Direct-sum totalization with the vertical differential of column p
/// multiplied by (−1)^p. Throws SignIncoherence when d² ≠ 0.
ComplexWindow totalize(const Bicomplex& b, bool bounded_below, bool bounded_above);

/// Cone of a chain map f^n: C^n → D^n: Cone^n = C^{n+1} ⊕ D^n with
/// d(c, x) = (−dc, f(c) + dx).
ComplexWindow cone(const ComplexWindow& c, const ComplexWindow& d, const std::map<int, GradedMap>& f);

}  // namespace superkoszul
