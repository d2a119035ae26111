#include "doctest.h"
#include "g2v/algebra.hpp"

using namespace g2v;
using enum Generator;

namespace {

LinComb single(Generator g, const Rational& c) {
    LinComb v;
    v.add(g, c);
    return v;
}

LinComb scalar_comb(const Rational& c) {
    LinComb v;
    v.scalar = c;
    return v;
}

}  // namespace

TEST_CASE("LinComb arithmetic") {
    LinComb v;
    CHECK(v.is_zero());
    v.add(cp, frac(1, 2));
    v.add(cp, frac(-1, 2));
    CHECK(v.is_zero());

    v.add(dp, 3);
    v.add(h1, frac(1, 4));
    LinComb expect;
    expect.add(dp, 1);
    expect.add(h1, frac(1, 12));
    CHECK(v * frac(1, 3) == expect);
    CHECK((v * 0).is_zero());

    LinComb s = v;
    s += -v;
    CHECK(s.is_zero());
}

TEST_CASE("commutator spot values") {
    CHECK(commutator(a1m, a1p) == scalar_comb(1));
    CHECK(commutator(a2m, a2p) == scalar_comb(1));
    CHECK(commutator(a1p, a1m) == scalar_comb(-1));

    CHECK(commutator(b1m, b1p) == single(h1, 2));
    CHECK(commutator(b2m, b2p) == single(h2, 2));

    CHECK(commutator(h1, dp) == single(dp, frac(1, 2)));
    CHECK(commutator(h2, dp) == single(dp, frac(-1, 2)));
    CHECK(commutator(h1, b1m) == single(b1m, -1));

    LinComb cc;
    cc.add(h1, frac(1, 2));
    cc.add(h2, frac(1, 2));
    CHECK(commutator(cm, cp) == cc);

    LinComb dd;
    dd.add(h1, frac(-1, 2));
    dd.add(h2, frac(1, 2));
    CHECK(commutator(dm, dp) == dd);

    CHECK(commutator(cp, dp) == single(b1p, frac(-1, 2)));
    CHECK(commutator(cm, dm) == single(b1m, frac(1, 2)));
    CHECK(commutator(cp, dm) == single(b2p, frac(-1, 2)));

    CHECK(commutator(a1m, b1p) == single(a1p, 1));
    CHECK(commutator(a1p, cm) == single(a2m, frac(-1, 2)));
    CHECK(commutator(a2p, dp) == single(a1p, frac(-1, 2)));
    CHECK(commutator(b2m, cp) == single(dp, 1));

    CHECK(commutator(h1, h2).is_zero());
    CHECK(commutator(a1p, a2p).is_zero());
    CHECK(commutator(b1p, b2p).is_zero());
    CHECK(commutator(b1p, b1p).is_zero());
}

TEST_CASE("antisymmetry on all ordered pairs") {
    for (Generator x : all_generators)
        for (Generator y : all_generators)
            CHECK(commutator(x, y) == -commutator(y, x));
}

TEST_CASE("Jacobi identity on all ordered triples") {
    int bad = 0;
    for (Generator x : all_generators)
        for (Generator y : all_generators)
            for (Generator z : all_generators)
                if (!jacobiator(x, y, z).is_zero()) ++bad;
    CHECK(bad == 0);
}

TEST_CASE("jacobiator examples") {
    CHECK(jacobiator(h1, b1p, b1m).is_zero());
    CHECK(jacobiator(a1m, a1p, h1).is_zero());
    CHECK(jacobiator(cp, cp, dm).is_zero());
}

TEST_CASE("grading consistency of the bracket") {
    for (Generator x : all_generators)
        for (Generator y : all_generators) {
            GradeVector s = adjoint_grade(x) + adjoint_grade(y);
            LinComb c = commutator(x, y);
            for (const auto& [g, coef] : c.terms) {
                CHECK(coef != 0);
                CHECK(adjoint_grade(g) == s);
            }
            if (c.scalar != 0) CHECK(s == GradeVector{0, 0});
        }
}

TEST_CASE("Cartan eigenvalues match the adjoint grade") {
    for (Generator g : all_generators) {
        GradeVector gr = adjoint_grade(g);
        CHECK(commutator(h1, g) == single(g, frac(gr.p1, 2)));
        CHECK(commutator(h2, g) == single(g, frac(gr.p2, 2)));
    }
}

TEST_CASE("adjoint grades") {
    CHECK(adjoint_grade(a1p) == GradeVector{1, 0});
    CHECK(adjoint_grade(b2m) == GradeVector{0, -2});
    CHECK(adjoint_grade(cp) == GradeVector{1, 1});
    CHECK(adjoint_grade(dm) == GradeVector{-1, 1});
    CHECK(adjoint_grade(h1) == GradeVector{0, 0});
}

TEST_CASE("generator names") {
    CHECK(std::string(generator_name(a1p)) == "a1+");
    CHECK(std::string(generator_name(dm)) == "d-");
    CHECK(std::string(generator_name(h2)) == "h2");
}
