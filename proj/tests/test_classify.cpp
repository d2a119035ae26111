#include "doctest.h"
#include "g2v/classify.hpp"
#include "g2v/singular.hpp"

#include <vector>

using namespace g2v;
using K = SvType::Kind;

TEST_CASE("classification of the reference weights") {
    std::vector<Finding> f = classify(Weight{frac(-1, 4), frac(-1, 4)});
    REQUIRE(f.size() == 5);
    CHECK(f[0].sv_type == SvType{K::i, 1, 0});
    CHECK(f[0].target == Weight{frac(1, 4), frac(-3, 4)});
    CHECK(f[1].sv_type == SvType{K::ii, 2, 0});
    CHECK(f[1].target == Weight{frac(-1, 4), frac(7, 4)});
    CHECK(f[2].sv_type == SvType{K::iii, 5, 2});
    CHECK(f[2].target == Weight{frac(9, 4), frac(-3, 4)});
    CHECK(f[3].sv_type == SvType{K::iv, 5, 0});
    CHECK(f[3].target == Weight{frac(9, 4), frac(9, 4)});
    CHECK(f[4].sv_type == SvType{K::v, 3, 0});
    CHECK(f[4].target == Weight{frac(11, 4), frac(-1, 4)});
    CHECK(case_label(f) == "A12345");

    CHECK(classify(Weight{0, frac(1, 3)}).empty());
    CHECK(case_label(classify(Weight{0, frac(1, 3)})) == "irreducible");

    std::vector<Finding> f11 = classify(Weight{1, 1});
    REQUIRE(f11.size() == 1);
    CHECK(f11[0].sv_type == SvType{K::i, 1, 0});
    CHECK(f11[0].target == Weight{frac(3, 2), frac(1, 2)});
    CHECK(case_label(f11) == "A1");

    std::vector<Finding> f24 = classify(Weight{frac(5, 4), frac(1, 4)});
    REQUIRE(f24.size() == 2);
    CHECK(f24[0].sv_type == SvType{K::ii, 1, 0});
    CHECK(f24[0].target == Weight{frac(5, 4), frac(5, 4)});
    CHECK(f24[1].sv_type == SvType{K::iv, 1, 0});
    CHECK(f24[1].target == Weight{frac(7, 4), frac(3, 4)});
    CHECK(case_label(f24) == "A24");
}

TEST_CASE("target_weight") {
    CHECK(target_weight(Weight{1, frac(3, 2)}, SvType{K::i, 2, 0}) ==
          Weight{2, frac(1, 2)});
    CHECK(target_weight(Weight{frac(7, 8), frac(1, 4)}, SvType{K::ii, 1, 0}) ==
          Weight{frac(7, 8), frac(5, 4)});
    CHECK(target_weight(Weight{frac(3, 4), frac(-2, 3)}, SvType{K::v, 1, 0}) ==
          Weight{frac(7, 4), frac(-2, 3)});
    CHECK(target_weight(Weight{frac(-1, 4), frac(-1, 4)}, SvType{K::iii, 5, 2}) ==
          Weight{frac(9, 4), frac(-3, 4)});
}

TEST_CASE("case_label") {
    CHECK(case_label({}) == "irreducible");

    std::vector<Finding> one{{SvType{K::i, 1, 0}, Weight{0, 0}}};
    CHECK(case_label(one) == "A1");

    std::vector<Finding> three{
        {SvType{K::ii, 1, 0}, Weight{0, 0}},
        {SvType{K::iv, 2, 0}, Weight{0, 0}},
        {SvType{K::v, 1, 0}, Weight{0, 0}},
    };
    CHECK(case_label(three) == "A245");
}

TEST_CASE("findings are consistent with the singular vector engine") {
    for (Weight lw : {Weight{frac(-1, 4), frac(-1, 4)}, Weight{frac(5, 4), frac(1, 4)},
                      Weight{1, 1}})
        for (const Finding& f : classify(lw)) {
            CHECK(weight_matches(f.sv_type, lw));
            CHECK(f.target == target_weight(lw, f.sv_type));
            GradeVector g = sv_grade(f.sv_type);
            CHECK(is_singular(closed_form_sv(f.sv_type, lw)));
            CHECK_FALSE(brute_force_sv(lw, g.p1, g.p2).empty());
        }
}

TEST_CASE("kind-iii regimes map to the three combined labels") {
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) {
            if (p == q || p == 2 * q) continue;
            Weight lw = type_weight(SvType{K::iii, p, q});
            std::vector<Finding> f = classify(lw);
            std::string label = case_label(f);
            if (p < q)
                CHECK(label == "A234");
            else if (p < 2 * q)
                CHECK(label == "A2345");
            else
                CHECK(label == "A12345");

            // derived parameters at the kind-iii weight
            for (const Finding& fd : f) {
                switch (fd.sv_type.kind) {
                    case K::i:   CHECK(fd.sv_type.p == p - 2 * q); break;
                    case K::ii:  CHECK(fd.sv_type.p == q); break;
                    case K::iii: CHECK(fd.sv_type == SvType{K::iii, p, q}); break;
                    case K::iv:  CHECK(fd.sv_type.p == p); break;
                    case K::v:   CHECK(fd.sv_type.p == p - q); break;
                }
            }
        }
}

TEST_CASE("excluded kind-iii parameters leave the coincident families") {
    for (int q = 1; q <= 5; ++q) {
        // p3 = q3: the would-be kind-iii weight carries exactly ii and iv
        Weight eq{frac(5, 4), frac(3, 4) - frac(q, 2)};
        CHECK(case_label(classify(eq)) == "A24");

        // p3 = 2*q3
        Weight dbl{frac(5, 4) - frac(q, 2), frac(3, 4) - frac(q, 2)};
        CHECK(case_label(classify(dbl)) == "A245");
    }
}

TEST_CASE("Finding JSON shape") {
    Finding f{SvType{K::iii, 5, 2}, Weight{frac(9, 4), frac(-3, 4)}};
    nlohmann::json j = finding_to_json(f);
    CHECK(j["type"] == "iii");
    CHECK(j["params"] == nlohmann::json{{"p3", 5}, {"q3", 2}});
    CHECK(j["target"] == nlohmann::json::array({"9/4", "-3/4"}));

    Finding f1{SvType{K::i, 2, 0}, Weight{1, 0}};
    nlohmann::json j1 = finding_to_json(f1);
    CHECK(j1["type"] == "i");
    CHECK(j1["params"] == nlohmann::json{{"p1", 2}});
    CHECK(j1["target"] == nlohmann::json::array({"1/1", "0/1"}));
}
