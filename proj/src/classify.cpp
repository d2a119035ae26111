#include "g2v/classify.hpp"

namespace g2v {

namespace {

bool positive_int(const Rational& r, int& out) {
    if (!is_positive_integer(r)) return false;
    out = static_cast<int>(to_long(r));
    return true;
}

}  // namespace

Weight target_weight(const Weight& lw, const SvType& t) {
    GradeVector g = sv_grade(t);
    return {lw.lambda1 + frac(g.p1, 2), lw.lambda2 + frac(g.p2, 2)};
}

std::vector<Finding> classify(const Weight& lw) {
    const Rational& L1 = lw.lambda1;
    const Rational& L2 = lw.lambda2;
    std::vector<Finding> out;

    int p = 0, q = 0;
    if (positive_int(1 - 2 * (L1 - L2), p)) {
        SvType t{SvType::Kind::i, p, 0};
        out.push_back({t, target_weight(lw, t)});
    }
    if (positive_int(Rational(3, 2) - 2 * L2, p)) {
        SvType t{SvType::Kind::ii, p, 0};
        out.push_back({t, target_weight(lw, t)});
    }
    if (positive_int(Rational(3, 2) - 2 * L2, q) &&
        positive_int(Rational(3, 2) - 2 * L2 + Rational(5, 2) - 2 * L1, p) &&
        p != q && p != 2 * q) {
        SvType t{SvType::Kind::iii, p, q};
        out.push_back({t, target_weight(lw, t)});
    }
    if (positive_int(4 - 2 * (L1 + L2), p)) {
        SvType t{SvType::Kind::iv, p, 0};
        out.push_back({t, target_weight(lw, t)});
    }
    if (positive_int(Rational(5, 2) - 2 * L1, p)) {
        SvType t{SvType::Kind::v, p, 0};
        out.push_back({t, target_weight(lw, t)});
    }
    return out;
}

std::string case_label(const std::vector<Finding>& findings) {
    if (findings.empty()) return "irreducible";
    std::string label = "A";
    for (const Finding& f : findings)
        label += static_cast<char>('0' + f.sv_type.digit());
    return label;
}

nlohmann::json finding_to_json(const Finding& f) {
    nlohmann::json params;
    switch (f.sv_type.kind) {
        case SvType::Kind::i:   params["p1"] = f.sv_type.p; break;
        case SvType::Kind::ii:  params["p2"] = f.sv_type.p; break;
        case SvType::Kind::iii:
            params["p3"] = f.sv_type.p;
            params["q3"] = f.sv_type.q;
            break;
        case SvType::Kind::iv:  params["p4"] = f.sv_type.p; break;
        case SvType::Kind::v:   params["p5"] = f.sv_type.p; break;
    }
    return {{"type", f.sv_type.name()},
            {"params", params},
            {"target",
             {rat_to_string(f.target.lambda1), rat_to_string(f.target.lambda2)}}};
}

}  // namespace g2v
