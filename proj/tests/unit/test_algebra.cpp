#include "doctest.h"
#include "superkoszul/algebra.hpp"
#include "superkoszul/error.hpp"

#include <random>

using namespace superkoszul;

namespace {

Presentation sl11_three()
{
    Presentation p;
    p.add_generator({"e", {0, 1, 0}, 1, 0});
    p.add_generator({"f", {0, -1, 0}, 1, 0});
    p.add_generator({"h", {0, 0, 0}, 1, 0});
    p.add_relation("e*f+f*e-h");
    p.add_relation("e*h-h*e");
    p.add_relation("f*h-h*f");
    p.add_relation("2*e*e");
    p.add_relation("2*f*f");
    return p;
}

}  // namespace

TEST_CASE("sl11 three-generator rules")
{
    auto rs = complete(sl11_three(), 12);
    CHECK(rs.is_complete());
    CHECK(rs.rules().size() == 5);
    const auto& p = rs.presentation();
    CHECK(rs.normal_form(p.parse("e*f")) == p.parse("-f*e+h"));
    auto table = hilbert(rs, Grading::WordLength, 4);
    CHECK(table == std::map<int, long>{{0, 1}, {1, 3}, {2, 4}, {3, 4}, {4, 4}});
}

namespace {

Element random_element(std::mt19937& rng, std::size_t gens, int max_len)
{
    std::uniform_int_distribution<int> terms(0, 3), len(0, max_len), coef(-3, 3), den(1, 2);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(gens) - 1);
    Element x;
    for (int t = terms(rng); t > 0; --t) {
        Word w;
        for (int i = len(rng); i > 0; --i)
            w.push_back(letter(rng));
        Rational c(coef(rng), den(rng));
        c.canonicalize();
        x.add(w, c);
    }
    return x;
}

Presentation weyl_torus()
{
    Presentation p;
    p.add_generator({"d_t", {0, 0, 0}, 1, -1});
    p.add_generator({"d_e", {0, -1, 0}, 1, -1});
    p.add_generator({"e", {0, 1, 0}, 0, 1});
    p.add_generator({"t", {0, 0, 0}, 0, 1});
    p.add_relation("d_t*t - t*d_t - 1");
    p.add_relation("d_e*e + e*d_e - 1");
    p.add_relation("e*e");
    p.add_relation("d_e*d_e");
    p.add_relation("d_t*e - e*d_t");
    p.add_relation("d_e*t - t*d_e");
    p.add_relation("d_t*d_e - d_e*d_t");
    p.add_relation("t*e - e*t");
    p.declare_invertible("t");
    return p;
}

Presentation clifford()
{
    Presentation p;
    p.add_generator({"a", {0, 1, -1}, 0, 0});
    p.add_generator({"f", {0, -1, 1}, 1, 0});
    p.add_relation("a*f + f*a - 1");
    p.add_relation("a*a");
    p.add_relation("f*f");
    return p;
}

}  // namespace

TEST_CASE("normal form is idempotent, linear and multiplicative")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (const auto& p : {sl11_three(), weyl_torus(), clifford()}) {
        auto rs = complete(p, 10);
        REQUIRE(rs.is_complete());
        const auto& q = rs.presentation();
        for (int trial = 0; trial < 60; ++trial) {
            auto x = random_element(rng, q.size(), 3);
            auto y = random_element(rng, q.size(), 3);
            auto z = random_element(rng, q.size(), 2);
            const Rational a(coef(rng)), b(coef(rng));
            auto nx = rs.normal_form(x);
            INFO(q.to_string(x), " | ", q.to_string(y), " | ", q.to_string(z));
            CHECK(rs.normal_form(nx) == nx);
            CHECK(rs.normal_form(x * a + y * b) == nx * a + rs.normal_form(y) * b);
            CHECK(rs.normal_form(x * y) == rs.normal_form(nx * rs.normal_form(y)));
            CHECK(rs.normal_form(rs.normal_form(x * y) * z) == rs.normal_form(x * rs.normal_form(y * z)));
            for (const auto& [w, c] : nx.terms())
                CHECK(rs.is_normal(w));
        }
        for (const auto& r : q.relations())
            CHECK(rs.normal_form(r).is_zero());
    }
}

TEST_CASE("normal words are fixed and counted")
{
    auto rs = complete(clifford(), 8);
    CHECK(hilbert(rs, Grading::WordLength, 4) == std::map<int, long>{{0, 1}, {1, 2}, {2, 1}, {3, 0}, {4, 0}});
    for (int n = 0; n <= 3; ++n)
        for (const auto& w : rs.normal_words(n))
            CHECK(rs.normal_form(w) == Element::word(w));

    // Polynomial, exterior and free algebras on two letters.
    Presentation poly, ext, free;
    for (auto* p : {&poly, &ext, &free}) {
        p->add_generator({"x", {0, 0, 1}, 0, 0});
        p->add_generator({"y", {0, 0, 1}, 0, 0});
    }
    poly.add_relation("y*x - x*y");
    ext.add_relation("y*x + x*y");
    ext.add_relation("x*x");
    ext.add_relation("y*y");
    auto hp = hilbert(complete(poly, 8), Grading::WordLength, 5);
    auto he = hilbert(complete(ext, 8), Grading::WordLength, 5);
    auto hf = hilbert(complete(free, 8), Grading::WordLength, 5);
    for (int n = 0; n <= 5; ++n) {
        CHECK(hp[n] == n + 1);
        CHECK(he[n] == (n == 0 ? 1 : n == 1 ? 2 : n == 2 ? 1 : 0));
        CHECK(hf[n] == (1L << n));
    }
}

TEST_CASE("invertible generators")
{
    auto rs = complete(weyl_torus(), 10);
    const auto& p = rs.presentation();
    auto t = p.gen("t"), ti = p.gen("t_inv"), dt = p.gen("d_t");
    CHECK(rs.normal_form(t * ti) == Element::scalar(1));
    CHECK(rs.normal_form(ti * t) == Element::scalar(1));
    // d_t t^{-1} = t^{-1} d_t − t^{-2}
    CHECK(rs.normal_form(dt * ti - ti * dt + ti * ti).is_zero());
}

TEST_CASE("completion that does not terminate is reported")
{
    Presentation p;
    p.add_generator({"x", {0, 0, 1}, 0, 0});
    p.add_generator({"y", {0, 0, 1}, 0, 0});
    p.add_relation("x*y*x - y*x*y");
    auto rs = complete(p, 6);
    CHECK(!rs.is_complete());
}

TEST_CASE("parse errors")
{
    auto p = sl11_three();
    CHECK_THROWS_AS(p.parse("e*"), Error);
    CHECK_THROWS_AS(p.parse("q"), Error);
    CHECK_THROWS_AS(p.parse("(e"), Error);
    CHECK(p.parse("2*e - e - e").is_zero());
}
