#include "superkoszul/algebra.hpp"

#include "superkoszul/error.hpp"

#include <algorithm>
#include <cctype>

namespace superkoszul {

bool WordOrder::operator()(const Word& a, const Word& b) const
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i];
    return false;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    std::size_t h = w.size();
    for (int x : w)
        h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
}

Element Element::scalar(const Rational& c)
{
    Element e;
    e.add({}, c);
    return e;
}

Element Element::word(const Word& w, const Rational& c)
{
    Element e;
    e.add(w, c);
    return e;
}

Element Element::letter(int g, const Rational& c) { return word(Word{g}, c); }

int Element::max_length() const
{
    return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

void Element::add(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

Element Element::operator+(const Element& o) const
{
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const
{
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator-() const { return *this * Rational(-1); }

Element Element::operator*(const Element& o) const
{
    Element r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            r.add(w, ca * cb);
        }
    return r;
}

Element Element::operator*(const Rational& c) const
{
    Element r;
    if (c == 0)
        return r;
    for (const auto& [w, v] : terms_)
        r.terms_.emplace(w, v * c);
    return r;
}

Rational Element::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Presentation::add_generator(const Generator& g)
{
    if (index_of(g.name) >= 0)
        throw Error(ErrorKind::InvalidArgument, "duplicate generator '" + g.name + "'");
    generators_.push_back(g);
    return static_cast<int>(generators_.size()) - 1;
}

void Presentation::declare_invertible(const std::string& name)
{
    const Generator g = generators_[at(name)];
    Generator inv{name + "_inv", -g.degree, -g.weight, -g.tweight};
    add_generator(inv);
    invertible_.push_back(name);
    add_relation(gen(name) * gen(inv.name) - Element::scalar(1));
    add_relation(gen(inv.name) * gen(name) - Element::scalar(1));
}

void Presentation::add_relation(const std::string& expr) { add_relation(parse(expr)); }

int Presentation::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int Presentation::at(const std::string& name) const
{
    int i = index_of(name);
    if (i < 0)
        throw Error(ErrorKind::InvalidArgument, "unknown generator '" + name + "'");
    return i;
}

Degree Presentation::degree(const Word& w) const
{
    Degree d;
    for (int g : w)
        d += generators_[g].degree;
    return d;
}

int Presentation::weight(const Word& w) const
{
    int n = 0;
    for (int g : w)
        n += generators_[g].weight;
    return n;
}

int Presentation::tweight(const Word& w) const
{
    int n = 0;
    for (int g : w)
        n += generators_[g].tweight;
    return n;
}

std::string Presentation::word_name(const Word& w) const
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += "*";
        out += generators_[w[i]].name;
    }
    return out;
}

std::string Presentation::to_string(const Element& x) const
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const Rational& c = it->second;
        std::string coef = superkoszul::to_string(abs(c));
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (it->first.empty())
            out += coef;
        else if (coef == "1")
            out += word_name(it->first);
        else
            out += coef + "*" + word_name(it->first);
    }
    return out;
}

namespace {

class ExprParser {
public:
    ExprParser(const Presentation& p, const std::string& text) : p_(p), s_(text) {}

    Element run()
    {
        Element e = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expr()
    {
        Element e;
        if (eat('-'))
            e = -term();
        else
            e = term();
        for (;;) {
            if (eat('+'))
                e += term();
            else if (eat('-'))
                e -= term();
            else
                return e;
        }
    }

    Element term()
    {
        Element e = factor();
        while (eat('*'))
            e = e * factor();
        return e;
    }

    Element factor()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Element e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t den = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (den == pos_)
                    fail("expected denominator");
            }
            Rational r = parse_rational(s_.substr(start, pos_ - start));
            if (r.get_den() == 0)
                fail("zero denominator");
            return Element::scalar(r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int g = p_.index_of(name);
            if (g < 0)
                fail("unknown generator '" + name + "'");
            return Element::letter(g);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const Presentation& p_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Element Presentation::parse(const std::string& expr) const { return ExprParser(*this, expr).run(); }

namespace {

using RuleMap = std::map<Word, Element, WordOrder>;

// Position and rule of the leftmost reducible subword, or nullptr.
const RuleMap::value_type* find_match(const RuleMap& rules, const std::set<std::size_t>& lengths, const Word& w, std::size_t& pos)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len : lengths) {
            if (i + len > w.size())
                break;
            auto it = rules.find(Word(w.begin() + i, w.begin() + i + len));
            if (it != rules.end()) {
                pos = i;
                return &*it;
            }
        }
    return nullptr;
}

Element reduce_with(const RuleMap& rules, const std::set<std::size_t>& lengths, const Element& x)
{
    Element result;
    Element todo = x;
    while (!todo.is_zero()) {
        auto it = std::prev(todo.terms().end());
        Word w = it->first;
        Rational c = it->second;
        todo.add(w, -c);
        std::size_t pos = 0;
        const auto* rule = find_match(rules, lengths, w, pos);
        if (!rule) {
            result.add(w, c);
            continue;
        }
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rule->first.size(), w.end());
        for (const auto& [u, cu] : rule->second.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), u.begin(), u.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            todo.add(nw, c * cu);
        }
    }
    return result;
}

void check_homogeneous(const Presentation& p, const Element& r)
{
    if (r.is_zero())
        return;
    Degree d = p.degree(r.terms().begin()->first);
    for (const auto& [w, c] : r.terms())
        if (p.degree(w) != d)
            throw Error(ErrorKind::NonHomogeneousRelation, p.to_string(r));
}

}  // namespace

RewriteSystem::RewriteSystem(Presentation p, std::map<Word, Element, WordOrder> rules, int bound, bool complete)
    : presentation_(std::move(p)), rules_(std::move(rules)), bound_(bound), complete_(complete)
{
    for (const auto& [lhs, rhs] : rules_)
        lengths_.insert(lhs.size());
    certified_ = complete_ ? unlimited : std::max(0, (bound_ - 2) / 2);
}

void RewriteSystem::check_certified(const Word& w) const
{
    if (static_cast<int>(w.size()) > certified_)
        throw Error(ErrorKind::BoundExceeded, "word of length " + std::to_string(w.size()) + " beyond certified degree " + std::to_string(certified_));
}

bool RewriteSystem::is_normal(const Word& w) const
{
    std::size_t pos = 0;
    return find_match(rules_, lengths_, w, pos) == nullptr;
}

const Element& RewriteSystem::nf_word(const Word& w) const
{
    std::lock_guard<std::recursive_mutex> lock(*mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end())
        return it->second;
    std::size_t pos = 0;
    const auto* rule = find_match(rules_, lengths_, w, pos);
    Element result;
    if (!rule) {
        result.add(w, 1);
    } else {
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rule->first.size(), w.end());
        for (const auto& [u, cu] : rule->second.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), u.begin(), u.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            for (const auto& [v, cv] : nf_word(nw).terms())
                result.add(v, cu * cv);
        }
    }
    return cache_.emplace(w, std::move(result)).first->second;
}

Element RewriteSystem::normal_form(const Word& w) const
{
    check_certified(w);
    return nf_word(w);
}

Element RewriteSystem::normal_form(const Element& x) const
{
    for (const auto& [w, c] : x.terms())
        check_certified(w);
    Element out;
    for (const auto& [w, c] : x.terms())
        for (const auto& [v, cv] : nf_word(w).terms())
            out.add(v, c * cv);
    return out;
}

std::vector<Word> RewriteSystem::normal_words(int n) const
{
    check_certified(Word(static_cast<std::size_t>(std::max(n, 0)), 0));
    std::vector<Word> layer{Word{}};
    const int gens = static_cast<int>(presentation_.size());
    for (int len = 0; len < n; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int g = 0; g < gens; ++g) {
                Word nw = w;
                nw.push_back(g);
                bool ok = true;
                for (std::size_t l : lengths_) {
                    if (l > nw.size())
                        break;
                    if (rules_.count(Word(nw.end() - static_cast<long>(l), nw.end()))) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    next.push_back(std::move(nw));
            }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end(), WordOrder());
    return layer;
}

RewriteSystem complete(const Presentation& p, int bound)
{
    int longest = 0;
    for (const auto& r : p.relations()) {
        if (p.require_homogeneous)
            check_homogeneous(p, r);
        longest = std::max(longest, r.max_length());
    }
    if (bound < longest)
        throw Error(ErrorKind::BoundTooSmall, "bound " + std::to_string(bound) + " below relation length " + std::to_string(longest));

    struct Rule {
        Word lhs;
        Element rhs;
        long id;
    };
    std::vector<Rule> rules;
    RuleMap map;
    std::set<std::size_t> lengths;
    long next_id = 0;
    bool skipped = false;
    std::set<std::pair<long, long>> done;
    std::vector<Element> pending(p.relations().begin(), p.relations().end());

    auto rebuild = [&] {
        map.clear();
        lengths.clear();
        for (const auto& r : rules) {
            map.emplace(r.lhs, r.rhs);
            lengths.insert(r.lhs.size());
        }
    };

    auto insert_relation = [&](Element r) {
        r = reduce_with(map, lengths, r);
        if (r.is_zero())
            return;
        r = r * (1 / r.leading_coefficient());
        Word lhs = r.leading_word();
        Element rhs = Element::word(lhs) - r;
        // Rules whose leading word contains the new one are retired and
        // their relations requeued.
        std::vector<Rule> keep;
        for (auto& old : rules) {
            bool contains = false;
            if (old.lhs.size() >= lhs.size())
                for (std::size_t i = 0; i + lhs.size() <= old.lhs.size(); ++i)
                    if (std::equal(lhs.begin(), lhs.end(), old.lhs.begin() + static_cast<long>(i))) {
                        contains = true;
                        break;
                    }
            if (contains)
                pending.push_back(Element::word(old.lhs) - old.rhs);
            else
                keep.push_back(std::move(old));
        }
        rules = std::move(keep);
        rules.push_back({lhs, rhs, next_id++});
        rebuild();
    };

    for (;;) {
        while (!pending.empty()) {
            Element r = std::move(pending.back());
            pending.pop_back();
            insert_relation(std::move(r));
        }
        bool added = false;
        std::vector<Rule> snapshot = rules;
        for (const auto& a : snapshot) {
            for (const auto& b : snapshot) {
                if (done.count({a.id, b.id}))
                    continue;
                done.insert({a.id, b.id});
                const std::size_t la = a.lhs.size(), lb = b.lhs.size();
                for (std::size_t k = 1; k < std::min(la, lb); ++k) {
                    if (!std::equal(a.lhs.end() - static_cast<long>(k), a.lhs.end(), b.lhs.begin()))
                        continue;
                    if (static_cast<int>(la + lb - k) > bound) {
                        skipped = true;
                        continue;
                    }
                    Word tail(b.lhs.begin() + static_cast<long>(k), b.lhs.end());
                    Word head(a.lhs.begin(), a.lhs.end() - static_cast<long>(k));
                    Element s = a.rhs * Element::word(tail) - Element::word(head) * b.rhs;
                    s = reduce_with(map, lengths, s);
                    if (!s.is_zero()) {
                        pending.push_back(s);
                        added = true;
                    }
                }
            }
        }
        if (!added && pending.empty())
            break;
    }

    RuleMap final_rules;
    for (const auto& r : rules)
        final_rules.emplace(r.lhs, reduce_with(map, lengths, r.rhs));
    return RewriteSystem(p, std::move(final_rules), bound, !skipped);
}

std::map<int, long> hilbert(const RewriteSystem& rs, Grading grading, int max_length)
{
    std::map<int, long> table;
    const Presentation& p = rs.presentation();
    for (int n = 0; n <= max_length; ++n) {
        if (grading == Grading::WordLength)
            table[n] = 0;
        for (const auto& w : rs.normal_words(n)) {
            int key = 0;
            switch (grading) {
            case Grading::WordLength: key = n; break;
            case Grading::Coh: key = p.degree(w).coh; break;
            case Grading::Super: key = p.degree(w).s; break;
            case Grading::H: key = p.degree(w).h; break;
            case Grading::Weight: key = p.weight(w); break;
            case Grading::TWeight: key = p.tweight(w); break;
            }
            ++table[key];
        }
    }
    return table;
}

Element supercommutator(const Element& a, const Element& b, const Presentation& p)
{
    Element out = a * b;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wb;
            w.insert(w.end(), wa.begin(), wa.end());
            out.add(w, -ca * cb * koszul_sign(p.degree(wa), p.degree(wb)));
        }
    return out;
}

bool is_central(const Element& x, const RewriteSystem& rs)
{
    const Presentation& p = rs.presentation();
    std::map<Degree, Element> parts;
    for (const auto& [w, c] : x.terms())
        parts[p.degree(w)].add(w, c);
    for (const auto& [d, part] : parts)
        for (std::size_t g = 0; g < p.size(); ++g)
            if (!rs.normal_form(supercommutator(part, Element::letter(static_cast<int>(g)), p)).is_zero())
                return false;
    return true;
}

Presentation rees_algebra(const Presentation& p)
{
    Presentation out;
    for (auto g : p.generators()) {
        g.degree.h += g.weight;
        out.add_generator(g);
    }
    const int hb = out.add_generator({rees_variable, {0, 0, 1}, 0, 0});
    for (const auto& r : p.relations()) {
        if (r.is_zero())
            continue;
        const int top = p.weight(r.leading_word());
        Element hom;
        for (const auto& [w, c] : r.terms()) {
            int deficit = top - p.weight(w);
            if (deficit < 0)
                throw Error(ErrorKind::WeightIncompatibleRelation, p.to_string(r));
            Word nw = w;
            nw.insert(nw.end(), static_cast<std::size_t>(deficit), hb);
            hom.add(nw, c);
        }
        out.add_relation(hom);
    }
    for (int g = 0; g < hb; ++g)
        out.add_relation(Element::word({g, hb}) - Element::word({hb, g}));
    out.require_homogeneous = p.require_homogeneous;
    return out;
}

Presentation specialize(const Presentation& p, const std::string& gen, const Rational& value)
{
    Presentation out = p;
    out.add_relation(out.gen(gen) - Element::scalar(value));
    out.require_homogeneous = false;
    return out;
}

Presentation associated_graded(const Presentation& p) { return specialize(rees_algebra(p), rees_variable, 0); }

FiniteAlgebra::FiniteAlgebra(const RewriteSystem& rs, int max_length) : rs_(&rs)
{
    for (int n = 0;; ++n) {
        if (n > max_length)
            throw Error(ErrorKind::InvalidArgument, "algebra is not finite up to word length " + std::to_string(max_length));
        auto words = rs.normal_words(n);
        if (words.empty())
            break;
        for (auto& w : words) {
            index_.emplace(w, basis_.size());
            basis_.push_back(std::move(w));
        }
    }
}

linalg::Vec FiniteAlgebra::coordinates(const Element& x) const
{
    linalg::Vec v(basis_.size());
    const Element nf = rs_->normal_form(x);
    for (const auto& [w, c] : nf.terms())
        v[index_.at(w)] += c;
    return v;
}

Element FiniteAlgebra::element(const linalg::Vec& v) const
{
    Element x;
    for (std::size_t i = 0; i < v.size(); ++i)
        x.add(basis_[i], v[i]);
    return x;
}

std::size_t FiniteAlgebra::center_dim(bool super) const
{
    const Presentation& p = rs_->presentation();
    const std::size_t n = basis_.size();
    std::size_t total = 0;
    // Solve per parity class of the candidate; for the ordinary center the
    // two classes are solved jointly.
    std::vector<std::vector<std::size_t>> classes;
    if (super) {
        std::vector<std::size_t> even, odd;
        for (std::size_t i = 0; i < n; ++i)
            (p.degree(basis_[i]).odd() ? odd : even).push_back(i);
        classes = {even, odd};
    } else {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i;
        classes = {all};
    }
    for (const auto& cls : classes) {
        if (cls.empty())
            continue;
        linalg::Mat m;
        m.cols = cls.size();
        for (std::size_t g = 0; g < p.size(); ++g) {
            Element gen = Element::letter(static_cast<int>(g));
            std::vector<linalg::Vec> columns;
            for (std::size_t j : cls) {
                Element b = Element::word(basis_[j]);
                Element comm = super ? supercommutator(b, gen, p) : b * gen - gen * b;
                columns.push_back(coordinates(comm));
            }
            for (std::size_t r = 0; r < n; ++r) {
                linalg::Vec row(cls.size());
                for (std::size_t j = 0; j < cls.size(); ++j)
                    row[j] = columns[j][r];
                m.push_row(std::move(row));
            }
        }
        total += cls.size() - linalg::rank(m);
    }
    return total;
}

}  // namespace superkoszul
