#include "doctest.h"
#include "superkoszul/error.hpp"
#include "superkoszul/lie.hpp"

using namespace superkoszul;

namespace {

std::map<int, int> dims_by_s(const LieSuperalgebra& g)
{
    std::map<int, int> out;
    for (const auto& b : g.basis())
        ++out[b.s];
    return out;
}

const std::vector<std::vector<std::pair<int, int>>> small_shapes = {
    {{0, 1}}, {{0, 2}}, {{0, 3}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 1}}, {{0, 1}, {1, 2}}, {{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {-1, 2}},
};

}  // namespace

TEST_CASE("sl11 basis and brackets")
{
    auto g = sl11();
    REQUIRE(g.dim() == 3);
    CHECK(g.basis()[0].name == "e");
    CHECK(g.s(0) == 1);
    CHECK(g.s(1) == -1);
    CHECK(g.s(2) == 0);
    CHECK(g.bracket(0, 1) == LieVector{{2, 1}});
    CHECK(g.bracket(1, 0) == LieVector{{2, 1}});
    CHECK(g.bracket(2, 0).empty());
    CHECK(g.bracket(0, 0).empty());
    CHECK(jacobi_check(g).empty());
}

TEST_CASE("perturbed bracket is caught by the Jacobi check")
{
    auto g = sl11();
    g.set_bracket(2, 0, {{0, 1}});
    auto v = jacobi_check(g);
    REQUIRE(!v.empty());
    bool found = false;
    for (const auto& x : v)
        found = found || (x.x == "e" && x.y == "e" && x.z == "f");
    CHECK(found);
}

TEST_CASE("abelian algebra passes")
{
    LieSuperalgebra g({{"a", 0}, {"b", 1}, {"c", 0}});
    CHECK(jacobi_check(g).empty());
    CHECK(pbw_check(g, 5));
}

TEST_CASE("degree additivity and even self-brackets are enforced")
{
    LieSuperalgebra g({{"a", 0}, {"b", 1}});
    CHECK_THROWS_AS(g.set_bracket(0, 1, {{0, 1}}), Error);
    CHECK_THROWS_AS(g.set_bracket(0, 0, {{0, 1}}), Error);
}

TEST_CASE("gl dimensions by s-degree")
{
    auto g = gl({{0, 1}, {1, 1}});
    CHECK(dims_by_s(g) == std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});
    CHECK(jacobi_check(g).empty());
    auto g3 = gl({{0, 3}});
    CHECK(dims_by_s(g3) == std::map<int, int>{{0, 9}});
}

TEST_CASE("sl dimensions")
{
    CHECK(sl({{0, 2}, {1, 1}}).dim() == 8);
    CHECK(sl({{0, 1}, {1, 1}}).dim() == 3);
    linalg::Mat id(2, 2);
    id[0][0] = 1;
    id[1][1] = 1;
    CHECK(supertrace(id, {0, 1}) == 0);
}

TEST_CASE("library algebras satisfy Jacobi and supertrace kills brackets")
{
    for (const auto& shape : small_shapes) {
        for (const auto& g : {gl(shape), sl(shape)}) {
            CHECK(jacobi_check(g).empty());
            const auto& r = *g.realization();
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) {
                    linalg::Mat m(r.v_degrees.size(), r.v_degrees.size());
                    for (const auto& [k, c] : g.bracket(static_cast<int>(i), static_cast<int>(j)))
                        for (std::size_t a = 0; a < m.row_count(); ++a)
                            for (std::size_t b = 0; b < m.cols; ++b)
                                m[a][b] += c * r.matrices[k][a][b];
                    CHECK(supertrace(m, r.v_degrees) == 0);
                }
        }
    }
}

TEST_CASE("Borel and nilradical")
{
    auto g = gl({{0, 1}, {1, 1}});
    auto [b, n] = borel_and_nilradical(g, {0, 1});
    std::vector<std::string> bn, nn;
    for (int i : b.members)
        bn.push_back(g.basis()[i].name);
    for (int i : n.members)
        nn.push_back(g.basis()[i].name);
    CHECK(bn == std::vector<std::string>{"E11", "E12", "E22"});
    CHECK(nn == std::vector<std::string>{"E12"});
    CHECK(is_closed(g, b));
    CHECK(is_closed(g, n));

    auto s = sl11();
    auto [b1, n1] = borel_and_nilradical(s, {0, 1});
    CHECK(n1.members == std::vector<int>{0});
    auto [b2, n2] = borel_and_nilradical(s, {1, 0});
    CHECK(n2.members == std::vector<int>{1});

    auto g1 = gl({{0, 1}});
    auto [b3, n3] = borel_and_nilradical(g1, {0});
    CHECK(b3.members.size() == 1);
    CHECK(n3.members.empty());
}

TEST_CASE("PBW")
{
    auto s = sl11();
    CHECK(pbw_dimensions(s, 4) == std::vector<long>{1, 3, 4, 4, 4});
    CHECK(pbw_check(s, 4));
    CHECK(pbw_check(gl({{0, 1}, {1, 1}}), 5));
}

TEST_CASE("U(sl11) contains the two-generator algebra")
{
    auto rs = complete(universal_enveloping(sl11()), 12);
    const auto& p = rs.presentation();
    CHECK(rs.normal_form(p.parse("e*e")).is_zero());
    CHECK(rs.normal_form(p.parse("f*f")).is_zero());
    CHECK(rs.normal_form(p.parse("e*f+f*e")) == rs.normal_form(p.parse("h")));
}
