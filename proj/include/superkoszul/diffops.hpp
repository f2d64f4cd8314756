#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/complex.hpp"
#include "superkoszul/koszul.hpp"
#include "superkoszul/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superkoszul {

/// A coordinate of an affine superspace: odd exactly when s is odd. Only
/// even coordinates may be invertible (torus directions).
struct Coordinate {
    std::string name;
    int s = 0;
    bool invertible = false;
    int tweight = 0;
};

struct SuperSpace {
    std::vector<Coordinate> coordinates;
};

std::string partial_name(const std::string& coordinate);
std::string differential_name(const std::string& coordinate);

/// Weyl superalgebra. Generators, in order: the partials d_x (degree
/// (0,−s,0), weight 1), the coordinates (weight 0, invertible ones last),
/// then x_inv for each invertible coordinate. Normal words keep coordinates
/// left of partials.
struct DiffOpAlgebra {
    Presentation presentation;
    SuperSpace space;
    std::vector<int> coordinate;
    std::vector<int> partial;
    /// Generator index of x_inv, or −1.
    std::vector<int> inverse;

    /// x^α ∂^β as an (unnormalized) product, coordinates first. Negative
    /// exponents use the inverse generator.
    Element monomial(const std::vector<int>& alpha, const std::vector<int>& beta) const;
};

DiffOpAlgebra weyl_algebra(const SuperSpace& s);

/// Ω_A = A ⊗ Sym(Ω¹[−1]): dx in degree (1, s, 0) with filtration weight −1,
/// and d the de Rham derivation.
using OmegaAlgebra = DgPresentation;

OmegaAlgebra omega_algebra(const SuperSpace& s);

/// The de Rham complex of polynomial forms as a window: forms of polynomial
/// degree ≤ max_degree, with the polynomial degree in the h slot (d
/// preserves it). Invertible coordinates are rejected.
ComplexWindow de_rham_complex(const SuperSpace& s, int max_degree);

struct SpencerWindow {
    /// Coordinate exponents in [0, W], or [−W, W] for invertible ones.
    int max_coordinate_degree = 2;
    /// n = order + symmetric degree ≤ max_order.
    int max_order = 4;
};

/// Augmented Spencer complex D ⊗ Sym(Der[1]) → A. The vector ξ_a sits in
/// degree deg(∂_a) + (−1,0,0), A in cohomological degree 1 and the basis
/// element x^α∂^β ⊗ ξ^γ in h-degree n = |β| + |γ|, with
/// d(P ⊗ m) = Σ_a (−1)^{(p_a+1)|P|} P∂_a ⊗ ∂m/∂ξ_a and P ↦ P(1) on n = 0.
/// Stage k of `filtration` is F_k = (n ≤ k), the augmentation lying in F_0.
struct SpencerComplex {
    ComplexWindow complex;
    FiltrationData filtration;
    /// Dimension of the n = 0 piece of Sp and of A in the window.
    std::size_t order_zero_dim = 0;
    std::size_t a_dim = 0;
};

SpencerComplex spencer_complex(const DiffOpAlgebra& d, const SpencerWindow& w);

/// gr_n = F_n/F_{n−1} of the Spencer filtration is acyclic.
bool spencer_gr_exact(const SpencerComplex& sp, int n);

/// One block of Ω(D) = Sym(Ω¹[−1]) ⊗ D with d = Σ_a dx_a ⊗ ∂_a· (left
/// multiplication). Blocks are fixed by the Euler weight α_a − β_a + i_a of
/// each coordinate (i_a the exponent of dx_a), and `stages` holds
/// F_k = (j − i ≤ k) for k up to max_filtration, j the operator order.
struct DeRhamBlock {
    ComplexWindow complex;
    FiltrationData filtration;
};

DeRhamBlock de_rham_of_D(const DiffOpAlgebra& d, const std::vector<int>& euler_weight, int max_filtration);

/// Cohomology of Ω(D) in the block of the volume form dx ⊗ ∂_ε (Euler weight
/// +1 on even and −1 on odd coordinates), computed on F_k and F_{k+1}.
/// `degree` is set when the cohomology is one-dimensional and stable.
struct BerezinianReport {
    CohomologyTable table;
    bool stable = false;
    std::optional<Degree> degree;
};

BerezinianReport berezinian_check(const DiffOpAlgebra& d, int max_filtration);

struct MoritaReport {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::size_t super_center_dim = 0;
    std::size_t module_dim = 0;
    /// Dimension of the image of D_V in End(Λ[ε_1..ε_q]).
    std::size_t image_dim = 0;
    bool relations_hold = false;

    bool pass(int q) const;
};

/// Matrix of x when each generator g acts by generators[g] (x acts on
/// column vectors, so a word g1·g2 is the product M_{g1}·M_{g2}).
linalg::Mat represent(const Element& x, const std::vector<linalg::Mat>& generators, std::size_t n);

/// D_V for q odd variables, realized on Λ[ε_1..ε_q] by multiplication and
/// left derivatives.
MoritaReport morita_report(int q);
bool morita_check(int q);

/// Sym(g[1]) ⊗ Sym(g): y_i in degree (−1, s_i, 1), z_i in (0, s_i, 1) and
/// d y_i = z_i, truncated at polynomial degree (the h slot) ≤ max_degree.
ComplexWindow koszul_moment_complex(const LieSuperalgebra& g, int max_degree);

}  // namespace superkoszul
