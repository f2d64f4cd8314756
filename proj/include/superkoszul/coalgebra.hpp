#pragma once

#include "superkoszul/graded.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace superkoszul {

/// One term c · b_left ⊗ b_right of a coproduct.
struct CoproductTerm {
    int left;
    int right;
    Rational coef;
};

/// Finite (windowed) coaugmented dg-coalgebra given on a basis. `unit` is
/// the index of the coaugmentation 1; the counit is dual to it.
struct ConilpotentCoalgebra {
    GradedSpace space;
    int unit = 0;
    std::vector<std::vector<CoproductTerm>> coproduct;
    /// Coderivation of degree (1,0,0); absent means zero.
    std::optional<GradedMap> differential;

    std::vector<CoproductTerm> reduced(int i) const;
    bool is_unit(int i) const { return i == unit; }
};

/// (Δ⊗1)Δ = (1⊗Δ)Δ on every basis element.
bool coassociative(const ConilpotentCoalgebra& c);

/// (ε⊗1)Δ = id = (1⊗ε)Δ and Δ(1) = 1⊗1.
bool counit_laws(const ConilpotentCoalgebra& c);

/// Smallest n ≤ max_n with Δ̄^{(n)} = 0 on every basis element (the n-fold
/// iterated reduced coproduct), or nullopt when none is found.
std::optional<int> conilpotency_index(const ConilpotentCoalgebra& c, int max_n);

/// Δd = (d⊗1 + 1⊗d)Δ with Koszul signs, and d(1) = 0.
bool is_coderivation(const ConilpotentCoalgebra& c);

/// The coalgebra k[ε] with ε primitive of the given degree.
ConilpotentCoalgebra dual_numbers(const Degree& eps);

/// The trivial coalgebra k.
ConilpotentCoalgebra trivial_coalgebra();

}  // namespace superkoszul
