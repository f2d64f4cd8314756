#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/complex.hpp"
#include "superkoszul/diffops.hpp"
#include "superkoszul/lie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superkoszul {

/// Throughout this module the h slot of Degree carries the grading w with
/// e, f of weight 1, the Cartan h of weight 2 and α of weight −1, which makes
/// U(sl(1|1)), D^T and the resolution homogeneous. The sl(1|1) basis is
/// e (s = 1), f (s = −1), h.

/// k[t^±, ε] with t invertible; both coordinates have torus weight 1.
SuperSpace flag_space();

struct AnchorMap {
    LieSuperalgebra source;
    DiffOpAlgebra target;
    std::vector<Element> images;

    Element operator()(const LieVector& x) const;
};

/// e ↦ ε∂_t, f ↦ t∂_ε, h ↦ t∂_t + ε∂_ε.
AnchorMap build_anchor();

/// Ordered basis pairs (x, y) with ρ([x,y]) ≠ ρ(x)ρ(y) − (±)ρ(y)ρ(x).
std::vector<std::pair<std::string, std::string>> anchor_violations(const AnchorMap& a, const RewriteSystem& rs);

/// U(sl(1|1)) on e, f, h with the weight grading in the h slot.
Presentation enveloping_sl11();

/// k[h] ⊗ k⟨α, f⟩/([α,f] = 1, α² = f² = 0) on generators alpha, f, h with
/// order weights 0, 1, 1.
Presentation dt_presentation();

/// The T-invariant operators: the abstract presentation together with its
/// images α ↦ εt⁻¹, f ↦ t∂_ε, h ↦ t∂_t + ε∂_ε in the Weyl algebra. Throws
/// RelationFailure when a relation does not vanish there.
struct TInvariantAlgebra {
    Presentation presentation;
    AnchorMap anchor;
    std::vector<Element> images;
};

TInvariantAlgebra t_invariant_algebra();

/// Substitutes images for the generators (no normal form applied).
Element substitute(const Element& x, const std::vector<Element>& images);

struct TInvariantReport {
    bool relations_vanish = false;
    bool alpha_f_commutator = false;
    bool e_alpha_zero = false;
    bool e_equals_alpha_h = false;
    /// Normal words of the presentation by number of h letters.
    std::map<int, long> by_h_power;
    /// Per order n: normal words of order ≤ n, dimension of the
    /// torus-weight-0 operators of order ≤ n, rank of the image of those
    /// words, and whether that image lies inside the invariants.
    std::map<int, long> abstract_dim;
    std::map<int, long> invariant_dim;
    std::map<int, long> image_rank;
    bool image_inside = false;

    bool pass() const;
};

TInvariantReport t_invariant_report(const TInvariantAlgebra& t, int max_order);

struct MomentMapReport {
    bool gr_commutative = false;
    /// Symbols of the preimages of ρ(e), ρ(f), ρ(h) in gr D^T, printed.
    std::vector<std::string> mu_images;
    bool mu_matches = false;
    /// Dimensions by weight of O_{g*}[α]/(e − αh) and of gr D^T, and the
    /// rank of the comparison map.
    std::map<int, long> quotient_dims;
    std::map<int, long> gr_dims;
    std::map<int, long> map_rank;

    bool pass() const;
};

MomentMapReport moment_map_check(const TInvariantAlgebra& t, int max_weight);

/// Free U(sl(1|1))-modules of rank 2 with maps given by right multiplication
/// by matrices on row vectors. matrices[k] (k ≥ 1) maps P_k → P_{k−1}:
/// matrices[1] = (0 e; e −ef), matrices[k ≥ 2] = diag(e, e). The
/// augmentation sends the generators of P_0 to 1 and α in D^T.
struct ResolutionData {
    Presentation ug;
    Presentation dt;
    /// Images of e, f, h in D^T: αh, f, h.
    std::vector<Element> rho;
    std::vector<std::vector<std::vector<Element>>> matrices;
    std::vector<Element> augmentation;
    /// Degrees of the generators of each P_k (cohomological slot 0).
    std::vector<std::vector<Degree>> generators;
    int n_terms = 0;
};

/// Builds P_0 … P_{n_terms} and checks every composite, including the
/// augmentation, reduces to exactly 0 (CompositeNonzero otherwise).
ResolutionData periodic_resolution(int n_terms);

/// The augmentation composite recomputed in the Weyl algebra through the
/// T-invariant images.
bool augmentation_composite_in_weyl(const ResolutionData& r, const TInvariantAlgebra& t);

/// Augmented resolution P_{n_terms} → … → P_0 → D^T, P_k in cohomological
/// degree −k and D^T in degree 1, truncated at weight ≤ max_weight (a direct
/// summand). The left end is a window edge.
ComplexWindow resolution_window(const ResolutionData& r, int max_weight);

/// k[h, u]/(hu) ⊗ Λ[α₁, α₂] with h at (0,0,2), u at (1,−1,0), α₁ at
/// (0,1,−1), α₂ at (0,−1,1), truncated to cohomological degree ≤ max_coh and
/// weight ≤ max_weight. These degrees are taken after the shear.
CohomologyTable wbar_oracle(int max_coh, int max_weight);

/// The shear used for every comparison in this module: (coh, s, w) ↦
/// (coh, s, w + coh).
Degree shear(const Degree& d);
CohomologyTable shear(const CohomologyTable& t);

struct WeylMonadReport {
    /// Cohomology of Hom_U(P, D^T) in the reliable blocks, unsheared.
    CohomologyTable table;
    CohomologyTable oracle;
    bool matches = false;
    bool h_central = false;
    bool hu_zero = false;
    bool h_torsion_free_in_degree_zero = false;
    bool closed_under_composition = false;
    int n_terms = 0;
    int max_weight = 0;
    /// Reported region: cohomological degree ≤ max_coh, sheared weight ≤
    /// max_sheared_weight.
    int max_coh = 0;
    int max_sheared_weight = 0;

    bool pass() const;
};

WeylMonadReport weyl_monad(int max_coh, int max_sheared_weight);

struct SpecializationReport {
    Rational lambda;
    /// λ ≠ 0.
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::size_t super_center_dim = 0;
    std::size_t module_dim = 0;
    std::size_t image_dim = 0;
    bool relations_hold = false;
    bool morita_iso = false;
    /// λ = 0: tables for Y^+ = k[u] over W^+ and Y^- = k[v] over W^-.
    CohomologyTable classical_plus;
    CohomologyTable classical_minus;
    CohomologyTable complete_plus;
    bool u_sigma_zero = false;
    bool sigma_nonzero = false;
    CohomologyTable ce_table;
    bool matches_ce = false;
    int max_coh = 0;
    int min_complete_coh = 0;

    bool pass() const;
};

/// At λ = 0 the classical tables cover cohomological degrees [0, max_coh]
/// and the complete one [min_complete_coh, max_coh].
SpecializationReport weight_specialize(const Rational& lambda, int max_coh = 4, int min_complete_coh = -4);

}  // namespace superkoszul
