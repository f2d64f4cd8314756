#pragma once

#include "superkoszul/graded.hpp"
#include "superkoszul/linalg.hpp"

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace superkoszul {

/// A word is a sequence of generator indices.
using Word = std::vector<int>;

/// Degree-lexicographic term order: longer words are larger; at equal length
/// the first differing letter decides, and a lower generator index counts as
/// the larger letter. `operator()` is the strict "less than".
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Finite linear combination of words. Terms are kept sorted by the term
/// order, so the leading word is the last one.
class Element {
public:
    using Terms = std::map<Word, Rational, WordOrder>;

    Element() = default;
    static Element scalar(const Rational& c);
    static Element word(const Word& w, const Rational& c = 1);
    static Element letter(int g, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Rational& leading_coefficient() const { return terms_.rbegin()->second; }
    int max_length() const;

    void add(const Word& w, const Rational& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element operator*(const Rational& c) const;
    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Coefficient of a word, zero if absent.
    Rational coefficient(const Word& w) const;

private:
    Terms terms_;
};

struct Generator {
    std::string name;
    Degree degree;
    /// Filtration weight used by the Rees and associated graded constructions.
    int weight = 0;
    /// Torus weight label, outside Degree and sign-inert.
    int tweight = 0;
};

class Presentation {
public:
    Presentation() = default;

    int add_generator(const Generator& g);
    /// Adds `name_inv` with negated degree and weights, plus the two unit
    /// relations.
    void declare_invertible(const std::string& name);
    void add_relation(const Element& r) { relations_.push_back(r); }
    void add_relation(const std::string& expr);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Element>& relations() const { return relations_; }
    const std::vector<std::string>& invertible() const { return invertible_; }
    std::size_t size() const { return generators_.size(); }

    int index_of(const std::string& name) const;
    /// Index of a generator, throwing InvalidArgument when unknown.
    int at(const std::string& name) const;
    Element gen(const std::string& name) const { return Element::letter(at(name)); }

    Degree degree(const Word& w) const;
    int weight(const Word& w) const;
    int tweight(const Word& w) const;
    std::string word_name(const Word& w) const;
    std::string to_string(const Element& x) const;

    /// Parses an expression over the generators: identifiers, integer or
    /// rational coefficients, `*`, `+`, `-` and parentheses.
    Element parse(const std::string& expr) const;

    /// Relations failing Degree homogeneity are rejected by `complete`
    /// unless this is cleared.
    bool require_homogeneous = true;
    /// Set when every relation is of super-commutator form.
    bool commutation_shortcut = false;

private:
    std::vector<Generator> generators_;
    std::vector<Element> relations_;
    std::vector<std::string> invertible_;
};

/// Confluent (within its certified range) rewriting system for a presentation.
class RewriteSystem {
public:
    static constexpr int unlimited = INT_MAX;

    RewriteSystem(Presentation p, std::map<Word, Element, WordOrder> rules, int bound, bool complete);

    const Presentation& presentation() const { return presentation_; }
    const std::map<Word, Element, WordOrder>& rules() const { return rules_; }
    int completion_bound() const { return bound_; }
    /// Longest word length whose normal form is certified.
    int certified_degree() const { return certified_; }
    bool is_complete() const { return complete_; }

    Element normal_form(const Element& x) const;
    Element normal_form(const Word& w) const;
    Element multiply(const Element& a, const Element& b) const { return normal_form(a * b); }

    /// Whether a word contains no rule's leading word.
    bool is_normal(const Word& w) const;

    /// Normal words of length exactly n (not cached), deterministic order.
    std::vector<Word> normal_words(int n) const;

private:
    void check_certified(const Word& w) const;
    const Element& nf_word(const Word& w) const;

    Presentation presentation_;
    std::map<Word, Element, WordOrder> rules_;
    std::set<std::size_t> lengths_;
    int bound_;
    int certified_;
    bool complete_;
    mutable std::unordered_map<Word, Element, WordHash> cache_;
    mutable std::unique_ptr<std::recursive_mutex> mutex_ = std::make_unique<std::recursive_mutex>();
};

/// Overlap completion with combined overlap length ≤ bound.
RewriteSystem complete(const Presentation& p, int bound);

enum class Grading { WordLength, Coh, Super, H, Weight, TWeight };

/// Dimensions of graded pieces, counted over normal words of length ≤
/// max_length. Complete only for gradings that bound the word length.
std::map<int, long> hilbert(const RewriteSystem& rs, Grading grading, int max_length);

/// True iff x·g − (±)g·x reduces to zero for every generator g, componentwise
/// on the Degree-homogeneous parts of x.
bool is_central(const Element& x, const RewriteSystem& rs);

/// Super-commutator ab − (−1)^{|a||b|}ba for homogeneous a, b.
Element supercommutator(const Element& a, const Element& b, const Presentation& p);

/// Name of the Rees variable added by `rees_algebra`.
inline const std::string rees_variable = "hbar";

Presentation rees_algebra(const Presentation& p);
Presentation specialize(const Presentation& p, const std::string& gen, const Rational& value);
Presentation associated_graded(const Presentation& p);

/// A finite-dimensional algebra obtained from a complete rewrite system whose
/// normal words are finite in number.
class FiniteAlgebra {
public:
    FiniteAlgebra(const RewriteSystem& rs, int max_length = 64);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Word>& basis() const { return basis_; }
    const RewriteSystem& rewrite_system() const { return *rs_; }

    linalg::Vec coordinates(const Element& x) const;
    Element element(const linalg::Vec& v) const;

    /// Dimension of the center; with `super` the super-center (elements
    /// homogeneous-by-parity that supercommute with everything).
    std::size_t center_dim(bool super) const;

private:
    const RewriteSystem* rs_;
    std::vector<Word> basis_;
    std::map<Word, std::size_t, WordOrder> index_;
};

}  // namespace superkoszul
