#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/graded.hpp"
#include "superkoszul/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superkoszul {

/// Sparse vector in a Lie superalgebra basis.
using LieVector = std::map<int, Rational>;

struct LieBasisElement {
    std::string name;
    int s = 0;
};

/// Matrix data kept for algebras built from gl: the s-degrees of the standard
/// basis of V and, per Lie basis element, its matrix (row-major, d×d).
struct MatrixRealization {
    std::vector<int> v_degrees;
    std::vector<linalg::Mat> matrices;
};

class LieSuperalgebra {
public:
    LieSuperalgebra() = default;
    explicit LieSuperalgebra(std::vector<LieBasisElement> basis);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<LieBasisElement>& basis() const { return basis_; }
    int index_of(const std::string& name) const;
    int s(int i) const { return basis_[i].s; }
    bool odd(int i) const { return (basis_[i].s % 2) != 0; }

    /// Sets [x_i, x_j]; the opposite orientation follows by super
    /// antisymmetry. Throws on degree or symmetry violations.
    void set_bracket(int i, int j, const LieVector& value);
    LieVector bracket(int i, int j) const;
    Rational constant(int i, int j, int k) const;
    LieVector bracket(const LieVector& x, const LieVector& y) const;

    const std::optional<MatrixRealization>& realization() const { return realization_; }
    void set_realization(MatrixRealization r) { realization_ = std::move(r); }

    /// Copy with renamed basis elements.
    LieSuperalgebra renamed(const std::vector<std::string>& names) const;

private:
    std::vector<LieBasisElement> basis_;
    std::map<std::pair<int, int>, LieVector> upper_;
    std::optional<MatrixRealization> realization_;
};

struct JacobiViolation {
    std::string x, y, z;
};

std::vector<JacobiViolation> jacobi_check(const LieSuperalgebra& g);

/// gl(V) for V given as (s-degree, multiplicity) blocks. The matrix unit
/// E_ij sends the i-th basis vector of V to the j-th and has s-degree
/// s_j − s_i.
LieSuperalgebra gl(const std::vector<std::pair<int, int>>& shape);

/// Supertrace-zero subalgebra: off-diagonal units plus
/// H_i = E_ii − (−1)^{s_i − s_{i+1}} E_{i+1,i+1}.
LieSuperalgebra sl(const std::vector<std::pair<int, int>>& shape);

/// sl(1|1) with basis e = E12, f = E21, h = E11 + E22.
LieSuperalgebra sl11();

/// Σ_i (−1)^{s_i} m_ii.
Rational supertrace(const linalg::Mat& m, const std::vector<int>& v_degrees);

struct SubalgebraSpec {
    std::vector<int> members;
};

/// Basis elements spanning a subspace closed under the bracket?
bool is_closed(const LieSuperalgebra& g, const SubalgebraSpec& sub);

/// Upper-triangular (Borel) and strictly upper-triangular subalgebras of a
/// matrix-realized algebra with respect to an ordering of the basis of V.
std::pair<SubalgebraSpec, SubalgebraSpec> borel_and_nilradical(const LieSuperalgebra& g, const std::vector<int>& order);

/// U(g): one generator per basis element with weight 1 and the
/// super-commutator relations.
Presentation universal_enveloping(const LieSuperalgebra& g);

/// Dimensions of Sym(g_ev) ⊗ Λ(g_odd) by polynomial degree 0..n.
std::vector<long> pbw_dimensions(const LieSuperalgebra& g, int n);

/// Compares dim gr_k U(g) with the PBW prediction for k ≤ n.
bool pbw_check(const LieSuperalgebra& g, int n);

}  // namespace superkoszul
