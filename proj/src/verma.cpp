#include "g2v/verma.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2v {

void ModuleVector::add(const BasisKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

const char* lowering_op_name(LoweringOp op) {
    switch (op) {
        case LoweringOp::a1m:     return "a1-";
        case LoweringOp::a2m:     return "a2-";
        case LoweringOp::b1hat_m: return "b1hat-";
        case LoweringOp::b2hat_m: return "b2hat-";
        case LoweringOp::chat_m:  return "chat-";
        case LoweringOp::dhat_m:  return "dhat-";
    }
    return "?";
}

GradeVector op_grade(LoweringOp op) {
    switch (op) {
        case LoweringOp::a1m:     return {1, 0};
        case LoweringOp::a2m:     return {0, 1};
        case LoweringOp::b1hat_m: return {2, 0};
        case LoweringOp::b2hat_m: return {0, 2};
        case LoweringOp::chat_m:  return {1, 1};
        case LoweringOp::dhat_m:  return {1, -1};
    }
    return {0, 0};
}

GradeVector grade_of_key(const BasisKey& k) {
    return {2 * k.k1 + k.m1 + k.n1 + k.n2, 2 * k.k2 + k.m2 + k.n1 - k.n2};
}

Weight weight_of_key(const Weight& lw, const BasisKey& key) {
    GradeVector g = grade_of_key(key);
    return {lw.lambda1 + frac(g.p1, 2), lw.lambda2 + frac(g.p2, 2)};
}

std::vector<BasisKey> enumerate_grade(int p1, int p2) {
    std::vector<BasisKey> keys;
    if (p1 < 0 || p2 < -p1) return keys;
    for (int k1 = 0; 2 * k1 <= p1; ++k1)
        for (int m1 = 0; 2 * k1 + m1 <= p1; ++m1)
            for (int n1 = 0; 2 * k1 + m1 + n1 <= p1; ++n1) {
                int n2 = p1 - 2 * k1 - m1 - n1;
                int r = p2 - n1 + n2;  // r = 2*k2 + m2
                if (r < 0) continue;
                for (int k2 = 0; 2 * k2 <= r; ++k2)
                    keys.push_back({k1, k2, m1, r - 2 * k2, n1, n2});
            }
    std::sort(keys.begin(), keys.end());
    return keys;
}

namespace {

// One output term of a lowering action: integer prefactor (zero kills the
// term and keeps all indices non-negative), optional weight-dependent factor.
void emit(ModuleVector& out, const BasisKey& key, const Rational& c) {
    out.add(key, c);
}

}  // namespace

ModuleVector act(LoweringOp op, const ModuleVector& v) {
    const Rational& L1 = v.weight.lambda1;
    const Rational& L2 = v.weight.lambda2;
    ModuleVector out;
    out.weight = v.weight;

    for (const auto& [key, c] : v.terms) {
        const int k1 = key.k1, k2 = key.k2, m1 = key.m1, m2 = key.m2,
                  n1 = key.n1, n2 = key.n2;
        switch (op) {
            case LoweringOp::a1m:
                if (m1 > 0)
                    emit(out, {k1, k2, m1 - 1, m2, n1, n2}, c * m1);
                break;
            case LoweringOp::a2m:
                if (m2 > 0)
                    emit(out, {k1, k2, m1, m2 - 1, n1, n2}, c * m2);
                break;
            case LoweringOp::b1hat_m:
                if (k1 > 0)
                    emit(out, {k1 - 1, k2, m1, m2, n1, n2},
                         c * k1 * (2 * L1 + k1 + n1 + n2 - Rational(3, 2)));
                if (n1 > 0 && n2 > 0)
                    emit(out, {k1, k2, m1, m2, n1 - 1, n2 - 1},
                         c * frac(n1 * n2, 2) *
                             (L2 - L1 - frac(n2 - 1, 2)));
                if (n1 > 1)
                    emit(out, {k1, k2 + 1, m1, m2, n1 - 2, n2},
                         c * frac(n1 * (n1 - 1), 4));
                break;
            case LoweringOp::b2hat_m:
                if (k2 > 0)
                    emit(out, {k1, k2 - 1, m1, m2, n1, n2},
                         c * k2 * (2 * L2 + k2 + n1 - n2 - Rational(3, 2)));
                if (n1 > 0)
                    emit(out, {k1, k2, m1, m2, n1 - 1, n2 + 1}, c * n1);
                if (n1 > 1)
                    emit(out, {k1 + 1, k2, m1, m2, n1 - 2, n2},
                         c * frac(n1 * (n1 - 1), 4));
                break;
            case LoweringOp::dhat_m:
                if (n2 > 0)
                    emit(out, {k1, k2, m1, m2, n1, n2 - 1},
                         c * frac(n2, 2) * (L2 - L1 - frac(n2 - 1, 2)));
                if (k1 > 0)
                    emit(out, {k1 - 1, k2, m1, m2, n1 + 1, n2}, c * k1);
                if (n1 > 0)
                    emit(out, {k1, k2 + 1, m1, m2, n1 - 1, n2},
                         c * frac(n1, 2));
                break;
            case LoweringOp::chat_m:
                if (n1 > 0)
                    emit(out, {k1, k2, m1, m2, n1 - 1, n2},
                         c * frac(n1, 2) *
                             (L1 + k1 + L2 + k2 + frac(n1 - 2, 2)));
                if (k2 > 0 && n2 > 0)
                    emit(out, {k1, k2 - 1, m1, m2, n1, n2 - 1},
                         c * frac(k2 * n2, 2) *
                             (L2 - L1 - frac(n2 - 1, 2)));
                if (k1 > 0)
                    emit(out, {k1 - 1, k2, m1, m2, n1, n2 + 1}, c * k1);
                if (k1 > 0 && k2 > 0)
                    emit(out, {k1 - 1, k2 - 1, m1, m2, n1 + 1, n2},
                         c * k1 * k2);
                break;
        }
    }
    return out;
}

bool is_grade_homogeneous(const ModuleVector& v) {
    if (v.terms.empty()) return true;
    GradeVector g = grade_of_key(v.terms.begin()->first);
    for (const auto& [key, c] : v.terms)
        if (!(grade_of_key(key) == g)) return false;
    return true;
}

bool is_singular(const ModuleVector& v) {
    if (!is_grade_homogeneous(v))
        throw std::invalid_argument("is_singular requires a grade-homogeneous vector");
    if (v.is_zero()) return false;
    for (LoweringOp op : all_lowering_ops)
        if (!act(op, v).is_zero()) return false;
    return true;
}

nlohmann::json to_json(const ModuleVector& v) {
    nlohmann::json j;
    j["lambda"] = {rat_to_string(v.weight.lambda1), rat_to_string(v.weight.lambda2)};
    j["terms"] = nlohmann::json::array();
    for (const auto& [key, c] : v.terms) {
        nlohmann::json t;
        t["key"] = {key.k1, key.k2, key.m1, key.m2, key.n1, key.n2};
        t["coeff"] = rat_to_string(c);
        j["terms"].push_back(t);
    }
    return j;
}

ModuleVector module_vector_from_json(const nlohmann::json& j) {
    ModuleVector v;
    const auto& lam = j.at("lambda");
    if (!lam.is_array() || lam.size() != 2)
        throw std::invalid_argument("lambda must be a pair of rationals");
    v.weight.lambda1 = rat_from_string(lam[0].get<std::string>());
    v.weight.lambda2 = rat_from_string(lam[1].get<std::string>());
    for (const auto& t : j.at("terms")) {
        const auto& k = t.at("key");
        if (!k.is_array() || k.size() != 6)
            throw std::invalid_argument("key must have six entries");
        BasisKey key{k[0].get<int>(), k[1].get<int>(), k[2].get<int>(),
                     k[3].get<int>(), k[4].get<int>(), k[5].get<int>()};
        if (key.k1 < 0 || key.k2 < 0 || key.m1 < 0 || key.m2 < 0 ||
            key.n1 < 0 || key.n2 < 0)
            throw std::invalid_argument("negative basis key entry");
        Rational c = rat_from_string(t.at("coeff").get<std::string>());
        if (c == 0) throw std::invalid_argument("zero coefficient stored in terms");
        v.add(key, c);
    }
    return v;
}

}  // namespace g2v
