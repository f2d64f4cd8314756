#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/coalgebra.hpp"
#include "superkoszul/complex.hpp"

#include <map>
#include <vector>

namespace superkoszul {

/// Complex with a basis-adapted increasing filtration: basis vector i of C^n
/// lies in F_p exactly when level[n][i] <= p.
struct FilteredComplex {
    ComplexWindow complex;
    std::map<int, std::vector<int>> level;

    int level_of(int n, int i) const { return level.at(n)[i]; }
    int min_level() const;
    int max_level() const;
};

/// d(F_p) ⊆ F_p on the basis.
bool is_filtered(const FilteredComplex& v);

/// Complex with a degree-(0,0,1) action of h commuting with d. Images that
/// leave the window are dropped.
struct HModule {
    ComplexWindow complex;
    std::map<int, GradedMap> h_action;
};

/// ⊕_p F_p V for p ≤ h_max: the copy h^j·b of b sits in h-degree
/// h(b) + level(b) + j, and h acts by inclusion.
HModule rees_module(const FilteredComplex& v, int h_max);
ComplexWindow rees(const FilteredComplex& v, int h_max);

/// ⊕_p F_p/F_{p−1} with gr_p placed in h-degree h(b) + p.
ComplexWindow associated_graded(const FilteredComplex& v);

/// ⊕_i V/F_i for i in [i_min, i_max], the quotient V/F_i in h-degree
/// h(b) + i.
ComplexWindow corees(const FilteredComplex& v, int i_min, int i_max);

/// Which internal slot bounds a cobar-type window. Every reduced basis
/// element must have positive weight in it, so each block below the bound
/// is complete and all reported cohomology is exact.
enum class Slot { S, H };

struct Truncation {
    Slot slot = Slot::H;
    int max_weight = 0;
};

/// Reduced cobar window: words [c_1|…|c_k] in reduced basis elements, with
/// [c] in degree deg(c) + (1,0,0) and
/// d[c] = −[d_C c] + Σ (−1)^{|c'|} [c'|c''] over the reduced coproduct,
/// extended as a derivation. With `internal = false` the d_C term is
/// dropped.
struct CobarWindow {
    ComplexWindow complex;
    /// Word of coalgebra basis indices per basis vector of each C^n.
    std::map<int, std::vector<std::vector<int>>> words;
};

CobarWindow reduced_cobar(const ConilpotentCoalgebra& c, const Truncation& t, bool internal = true);

/// C ⊗ Cob(C) with d(c⊗w) = d_C c⊗w + (−1)^{|c|} c⊗d w
/// − Σ (−1)^{|c'|} c'⊗[c'']w, the sum over Δc with c'' reduced.
ComplexWindow twisted_tensor(const ConilpotentCoalgebra& c, const Truncation& t, bool internal = true);

/// The Hopf algebra of forms k[ε, dε] on the odd line: ε in degree (0,1,0),
/// dε in degree (1,1,0), both primitive, coproduct multiplicative. Forms
/// up to s-degree max_s; `de_rham` adds d(ε) = dε.
ConilpotentCoalgebra odd_line_forms(int max_s, bool de_rham);

/// The same forms as a complex filtered by form degree: ε^a dε^b in level −b.
FilteredComplex odd_line_forms_filtered(int max_s);

/// A comodule over k[ε] (ε of degree (−1,0,1)): a complex with
/// δ: M^n → M^{n+1} of degree (1,0,−1), δ² = 0 and dδ + δd = 0.
struct DualNumbersComodule {
    ComplexWindow complex;
    std::map<int, GradedMap> delta;
};

bool is_comodule(const DualNumbersComodule& m);

/// A k[h]-module built from a filtered complex or given directly, and its
/// counit cone Cone(R ⊗ C ⊗ N → N) for C = k[ε], R = k[h], truncated at
/// h ≤ h_max. `stages` is the two-step staircase R⊗ε⊗N ⊂ R⊗C⊗N.
struct ConeWitness {
    ComplexWindow cone;
    FiltrationData stages;
};

ConeWitness counit_cone(const HModule& n, int h_max);

/// Cone(M → C ⊗ R ⊗ M) for a k[ε]-comodule M, with the filtration by the
/// cohomological degree of the M factor (each quotient is one row of the
/// resolution).
ConeWitness unit_cone(const DualNumbersComodule& m, int h_max);

/// Differential graded presentation: the differential is the derivation
/// with the given images of the generators.
struct DgPresentation {
    Presentation algebra;
    std::vector<Element> differential;
};

/// Name of the cobar generator of k[ε] adjoined by relative_cobar.
inline const char* const cobar_eps = "[eps]";

/// Relative cobar construction over C = k[ε]: for a coaction
/// a ↦ a⊗1 + δ(a)⊗ε given by δ on the generators, returns A ⊗ k[[eps]]
/// with [eps] central of degree (0,0,1) and d(x) = δ(x)·[eps]. Throws
/// CoactionNotMultiplicative when δ is not a square-zero derivation
/// preserving the relations (checked with a completion to `bound`).
DgPresentation relative_cobar(const Presentation& a, const std::vector<Element>& delta, int bound);

/// d(d(x)) = 0 on every generator and d preserves every relation.
bool squares_to_zero(const DgPresentation& a, const RewriteSystem& rs);

}  // namespace superkoszul
