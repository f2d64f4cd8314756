#include "doctest.h"
#include "superkoszul/error.hpp"
#include "superkoszul/graded.hpp"

#include <random>

using namespace superkoszul;

namespace {

GradedSpace random_space(std::mt19937& rng, const std::string& prefix)
{
    std::uniform_int_distribution<int> dim(1, 3), deg(-2, 2), hdeg(-1, 1);
    std::vector<BasisVector> basis;
    const int n = dim(rng);
    for (int i = 0; i < n; ++i)
        basis.push_back({prefix + std::to_string(i), {deg(rng), deg(rng), hdeg(rng)}});
    return GradedSpace(basis);
}

// f⊗g on the lexicographic tensor basis, for maps of degree zero.
GradedMap tensor_maps(const GradedMap& f, const GradedMap& g)
{
    GradedMap out(tensor(f.source(), g.source()), tensor(f.target(), g.target()), f.degree() + g.degree());
    const int gs = static_cast<int>(g.source().dim());
    const int gt = static_cast<int>(g.target().dim());
    for (const auto& [fa, fv] : f.entries())
        for (const auto& [ga, gv] : g.entries())
            out.add(fa.first * gt + ga.first, fa.second * gs + ga.second, fv * gv);
    return out;
}

}  // namespace

TEST_CASE("Koszul sign examples")
{
    CHECK(koszul_sign({1, 0, 0}, {1, 0, 0}) == -1);
    CHECK(koszul_sign({1, 1, 0}, {1, 0, 0}) == 1);
    CHECK(koszul_sign({0, 1, 0}, {0, -1, 0}) == -1);
    CHECK(koszul_sign({0, 0, 1}, {0, 0, 1}) == 1);
    CHECK(koszul_sign({2, -1, 5}, {-3, 0, 0}) == -1);
}

TEST_CASE("sign is bilinear in total degree")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Degree a{deg(rng), deg(rng), deg(rng)}, b{deg(rng), deg(rng), deg(rng)}, c{deg(rng), deg(rng), deg(rng)};
        CHECK(koszul_sign(a + b, c) == koszul_sign(a, c) * koszul_sign(b, c));
        CHECK(koszul_sign(a, b) == koszul_sign(b, a));
    }
}

TEST_CASE("braiding is an involution and satisfies the hexagon")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = random_space(rng, "u");
        auto v = random_space(rng, "v");
        auto w = random_space(rng, "w");
        auto suv = braiding(u, v);
        CHECK(compose(braiding(v, u), suv) == identity_map(tensor(u, v)));
        // σ_{U,V⊗W} = (1⊗σ_{U,W})(σ_{U,V}⊗1)
        auto lhs = braiding(u, tensor(v, w));
        auto rhs = compose(tensor_maps(identity_map(v), braiding(u, w)), tensor_maps(suv, identity_map(w)));
        CHECK(lhs.entries() == rhs.entries());
        auto lhs2 = braiding(tensor(u, v), w);
        auto rhs2 = compose(tensor_maps(braiding(u, w), identity_map(v)), tensor_maps(identity_map(u), braiding(v, w)));
        CHECK(lhs2.entries() == rhs2.entries());
    }
}

TEST_CASE("shifts")
{
    GradedSpace v({{"a", {0, 1, 2}}});
    CHECK(shift(v, ShiftKind::Cohomological, 1)[0].degree == Degree{-1, 1, 2});
    CHECK(shift(v, ShiftKind::Super, 2)[0].degree == Degree{0, -1, 2});
    CHECK(shift(v, ShiftKind::Tate, 1)[0].degree == Degree{0, 1, 1});
}

TEST_CASE("maps reject inhomogeneous entries")
{
    GradedSpace v({{"a", {0, 0, 0}}, {"b", {1, 0, 0}}});
    GradedMap d(v, v, {1, 0, 0});
    d.add(1, 0, 1);
    CHECK_THROWS_AS(d.add(0, 0, 1), Error);
    CHECK(compose(d, d).is_zero());
}
