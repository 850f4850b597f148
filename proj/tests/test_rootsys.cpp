#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/rootsys.hpp"

using namespace hecke;

namespace {

Vec ev(int dim, int i, int sign = 1) // sign * e_i
{
    Vec v = zero_vec(dim);
    v[i] = sign;
    return v;
}

} // namespace

TEST_CASE("A2 closure enumeration")
{
    auto rs = build_root_system(Family::A, 2);
    CHECK(rs.dim == 3);
    REQUIRE(rs.positive_roots.size() == 3);
    // canonical order: height then lex
    CHECK(rs.positive_roots[2].coords == Vec{Rational(1), Rational(0), Rational(-1)});
    CHECK(rs.highest_root.coords == Vec{Rational(1), Rational(0), Rational(-1)});
    CHECK(rs.braid_orders[0][1] == 3);
}

TEST_CASE("B2 closure enumeration")
{
    auto rs = build_root_system(Family::B, 2);
    REQUIRE(rs.positive_roots.size() == 4);
    CHECK(rs.is_root(Vec{Rational(1), Rational(1)}));
    CHECK(rs.is_root(Vec{Rational(0), Rational(1)}));
    CHECK(rs.highest_root.coords == Vec{Rational(1), Rational(1)});
    CHECK(rs.braid_orders[0][1] == 4);
    CHECK(rs.root_at(Vec{Rational(0), Rational(1)}).length_class == LengthClass::Short);
    CHECK(rs.root_at(Vec{Rational(1), Rational(1)}).length_class == LengthClass::Long);
}

TEST_CASE("G2 closure enumeration")
{
    auto rs = build_root_system(Family::G2, 2);
    CHECK(rs.positive_roots.size() == 6);
    CHECK(rs.braid_orders[0][1] == 6);
    // highest root 3a+2b in the simple basis
    CHECK(rs.highest_coeffs == std::vector<int>{3, 2});
}

TEST_CASE("positive root counts for the larger shipped types")
{
    CHECK(build_root_system(Family::A, 3).positive_roots.size() == 6);
    CHECK(build_root_system(Family::B, 3).positive_roots.size() == 9);
    CHECK(build_root_system(Family::C, 3).positive_roots.size() == 9);
    CHECK(build_root_system(Family::D, 4).positive_roots.size() == 12);
}

TEST_CASE("unsupported family/rank is a configuration error")
{
    CHECK_THROWS_AS(build_root_system(Family::D, 2), ConfigError);
    CHECK_THROWS_AS(build_root_system(Family::B, 1), ConfigError);
    CHECK_THROWS_AS(parse_type("Z1"), ConfigError);
}

TEST_CASE("reflection examples")
{
    auto rs = build_root_system(Family::A, 2);
    auto r = rs.root_at(vsub(ev(3, 0), ev(3, 1))); // e1-e2
    CHECK(rs.reflect_vec(r, ev(3, 0)) == ev(3, 1));
    CHECK(rs.reflect_vec(r, r.coords) == vneg(r.coords));

    auto b2 = build_root_system(Family::B, 2);
    auto e2 = b2.root_at(ev(2, 1));
    Vec x = {Rational(1), Rational(1)};
    CHECK(b2.reflect_vec(e2, x) == Vec{Rational(1), Rational(-1)});
}

TEST_CASE("reflections are involutive on a sample of weights")
{
    auto rs = build_root_system(Family::B, 3);
    std::vector<Vec> xs = {
        {Rational(1), Rational(0), Rational(0)},
        {Rational(1, 2), Rational(3), Rational(-2)},
        {Rational(0), Rational(5, 3), Rational(1, 7)},
    };
    for (const auto& r : rs.positive_roots)
        for (const auto& x : xs)
            CHECK(rs.reflect_vec(r, rs.reflect_vec(r, x)) == x);
}

TEST_CASE("pairing examples")
{
    auto rs = build_root_system(Family::A, 2);
    auto r = rs.root_at(vsub(ev(3, 0), ev(3, 1)));
    CHECK(rs.pairing(r.coords, r) == 2);
    CHECK(rs.pairing(ev(3, 0), r) == 1);

    auto b2 = build_root_system(Family::B, 2);
    CHECK(b2.pairing(ev(2, 0), b2.root_at(ev(2, 1))) == 0);
}

TEST_CASE("pairing is Weyl invariant")
{
    auto rs = build_root_system(Family::C, 3);
    Vec x = {Rational(2), Rational(-1), Rational(1, 2)};
    for (const auto& r : rs.simple_roots)
        for (const auto& s : rs.positive_roots) {
            Vec rx = rs.reflect_vec(r, x);
            Root rsr = rs.root_at(rs.reflect_vec(r, s.coords));
            CHECK(rs.pairing(rx, rsr) == rs.pairing(x, s));
        }
}

TEST_CASE("closure is stable under all reflections")
{
    for (auto fam : {Family::A, Family::B, Family::D}) {
        auto rs = build_root_system(fam, fam == Family::D ? 3 : 2);
        for (const auto& r : rs.positive_roots)
            for (const auto& s : rs.positive_roots) {
                CHECK(rs.is_root(rs.reflect_vec(r, s.coords)));
                CHECK(rs.is_root(rs.reflect_vec(r, vneg(s.coords))));
            }
    }
}

TEST_CASE("weyl length examples")
{
    auto rs = build_root_system(Family::A, 2);
    CHECK(rs.weyl_length(rs.identity_element()) == 0);
    CHECK(rs.weyl_length(rs.simple_element(0)) == 1);
    auto w0 = rs.from_word({0, 1, 0});
    CHECK(rs.weyl_length(w0) == 3); // longest element of A2 = |Phi+|
}

TEST_CASE("inversion count equals chamber-walk reduced word length")
{
    auto rs = build_root_system(Family::B, 2);
    // enumerate all of W(B2) by breadth-first products
    std::vector<WeylElement> elems = {rs.identity_element()};
    std::vector<Mat> seen = {elems[0].matrix};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (int i = 0; i < rs.rank; ++i) {
            auto w = rs.compose(rs.simple_element(i), elems[k]);
            if (std::find(seen.begin(), seen.end(), w.matrix) == seen.end()) {
                seen.push_back(w.matrix);
                elems.push_back(w);
            }
        }
    CHECK(elems.size() == 8);
    for (const auto& w : elems) {
        auto word = rs.reduced_word_of(w.matrix);
        CHECK(static_cast<int>(word.size()) == rs.weyl_length(w));
        CHECK(rs.from_word(word).matrix == w.matrix);
    }
}

TEST_CASE("weyl matrices are orthogonal for the form")
{
    auto rs = build_root_system(Family::G2, 2);
    auto w = rs.from_word({0, 1, 0, 1});
    // M^T G M == G
    Mat mt(rs.dim, zero_vec(rs.dim));
    for (int i = 0; i < rs.dim; ++i)
        for (int j = 0; j < rs.dim; ++j)
            mt[i][j] = w.matrix[j][i];
    CHECK(mat_mul(mt, mat_mul(rs.gram, w.matrix)) == rs.gram);
}

TEST_CASE("dominance examples")
{
    auto rs = build_root_system(Family::A, 2);
    CHECK(rs.is_dominant(zero_vec(3)));
    CHECK(rs.is_dominant(ev(3, 0)));
    CHECK_FALSE(rs.is_dominant(vsub(ev(3, 1), ev(3, 0))));
}

TEST_CASE("minuscule weights")
{
    CHECK(build_root_system(Family::A, 2).minuscule_weights().size() == 3); // 0 + 2
    CHECK(build_root_system(Family::B, 2).minuscule_weights().size() == 2); // 0 + 1
    CHECK(build_root_system(Family::D, 4).minuscule_weights().size() == 4); // 0 + 3

    auto rs = build_root_system(Family::D, 4);
    for (const auto& g : rs.minuscule_weights()) {
        if (is_zero_vec(g.coords))
            continue;
        CHECK(rs.is_dominant(g.coords));
        CHECK(rs.form(g.coords, rs.highest_root.coords) == 1);
        for (const auto& r : rs.positive_roots) {
            Rational p = rs.form(g.coords, r.coords);
            CHECK((p == 0 || p == 1));
        }
    }
}

TEST_CASE("coweight and coroot lattice membership")
{
    auto rs = build_root_system(Family::C, 3);
    CHECK(rs.in_coweight_lattice(Vec{Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(rs.in_coweight_lattice(Vec{Rational(1), Rational(0), Rational(0)}));
    CHECK_FALSE(rs.in_coweight_lattice(Vec{Rational(1, 2), Rational(0), Rational(0)}));

    auto a2 = build_root_system(Family::A, 2);
    // e1 + (e1+e2) = 2e1+e2 has coordinate sum 3, i.e. lies in Q^V + diagonal
    CHECK(a2.in_coroot_lattice(Vec{Rational(2), Rational(1), Rational(0)}));
    CHECK_FALSE(a2.in_coroot_lattice(Vec{Rational(1), Rational(0), Rational(0)}));
    CHECK(a2.minuscule_rep_of_negative(ev(3, 0)) ==
          Vec{Rational(1), Rational(1), Rational(0)});
}

TEST_CASE("describe emits the canonical text form")
{
    auto rs = build_root_system(Family::G2, 2);
    auto text = rs.describe();
    CHECK(text.find("family G2") != std::string::npos);
    CHECK(text.find("positive_roots 6") != std::string::npos);
    CHECK(text.find("m(1,2)=6") != std::string::npos);
}

TEST_CASE("compact type parsing")
{
    auto t = parse_type("B3");
    CHECK(t.family == Family::B);
    CHECK(t.rank == 3);
    CHECK(parse_type("A1xA1").family == Family::A1xA1);
    CHECK(parse_type("g2").rank == 2);
}
