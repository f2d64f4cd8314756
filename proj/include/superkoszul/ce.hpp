#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/coalgebra.hpp"
#include "superkoszul/complex.hpp"
#include "superkoszul/lie.hpp"
#include "superkoszul/supercomm.hpp"

#include <vector>

namespace superkoszul {

/// Finite-dimensional g-module: action[i] is the matrix of the i-th basis
/// element of g (rows = target basis, columns = source basis).
struct CEModule {
    GradedSpace space;
    std::vector<linalg::Mat> action;
};

CEModule trivial_module(const LieSuperalgebra& g);
CEModule adjoint_module(const LieSuperalgebra& g);

/// Degree compatibility and ρ([x,y]) = ρ(x)ρ(y) − (±)ρ(y)ρ(x).
bool is_module(const LieSuperalgebra& g, const CEModule& m);

/// Cochain variables x^i dual to the basis of g: degree (1, −s_i, −w_i),
/// exterior exactly when s_i is even. `weights` (optional) go to the h slot.
SuperRing cochain_ring(const LieSuperalgebra& g, const std::vector<int>& weights = {});

/// d x^k = −½ Σ_{i,j} (−1)^{p_i} c_{ij}^k x^i x^j.
std::vector<SuperPoly> cochain_generator_differentials(const LieSuperalgebra& g, const SuperRing& ring);

/// C^n = Sym^n(g*[−1]) ⊗ M for n in [0, n_max], with
/// d(ω⊗m) = dω⊗m + Σ_i (−1)^{|ω| + p_i p_m} ω x^i ⊗ ρ(e_i)m.
/// Bounded below; the top degree is a window edge.
ComplexWindow cochain_complex(const LieSuperalgebra& g, const CEModule& m, int n_max, const std::vector<int>& weights = {});

/// Chain variables y_i = e_i[1]: degree (−1, s_i, w_i).
SuperRing chain_ring(const LieSuperalgebra& g, const std::vector<int>& weights = {});

/// Trivial-coefficient chains C_{−n} = Sym^n(g[1]) for n in [0, n_max],
/// cohomologically indexed in [−n_max, 0]. Bounded above; −n_max is a
/// window edge.
ComplexWindow chain_complex(const LieSuperalgebra& g, int n_max, const std::vector<int>& weights = {});

/// The same window with its shuffle coproduct and CE coderivation.
ConilpotentCoalgebra chain_coalgebra(const LieSuperalgebra& g, int n_max, const std::vector<int>& weights = {});

/// The curved algebra B = U(g_ev) ⊗ Sym(g_odd*[−1]) with d = 0.
struct CurvedAlgebra {
    Presentation presentation;
    Element curvature;
};

/// Generators: even basis elements of g, then y_a dual to the odd basis
/// elements (degree (1, −s_a, 0), even total). Relations: the bracket on
/// g_ev, commuting y's and [x, y_a] = −Σ_b c_{x b}^a y_b. Curvature
/// c = Σ_{k even} e_k · pr(d x^k), the projection keeping only the
/// odd–odd part of the cochain differential.
CurvedAlgebra curved_B(const LieSuperalgebra& g);

}  // namespace superkoszul
