#pragma once

#include "g2v/algebra.hpp"
#include "g2v/rational.hpp"

#include <json.hpp>

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace g2v {

// Point of the Cartan dual; exact equality is the identity criterion.
struct Weight {
    Rational lambda1;
    Rational lambda2;

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2;
    }
    // lexicographic, for display/canonical ordering only
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.lambda1 != b.lambda1) return a.lambda1 < b.lambda1;
        return a.lambda2 < b.lambda2;
    }
};

// Exponent tuple of the PBW-style basis vector
//   (b1hat+)^k1 (b2hat+)^k2 (a1+)^m1 (a2+)^m2 (chat+)^n1 (d+)^n2 |0>.
struct BasisKey {
    int k1 = 0, k2 = 0, m1 = 0, m2 = 0, n1 = 0, n2 = 0;

    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

// Element of V^Lambda: finite rational combination of basis keys.
struct ModuleVector {
    Weight weight;  // lowest weight of the ambient module
    std::map<BasisKey, Rational> terms;

    void add(const BasisKey& k, const Rational& c);
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.weight == b.weight && a.terms == b.terms;
    }
};

// The six lowering operators whose action closes on the basis.
enum class LoweringOp { a1m, a2m, b1hat_m, b2hat_m, chat_m, dhat_m };

inline constexpr std::array<LoweringOp, 6> all_lowering_ops = {
    LoweringOp::a1m,     LoweringOp::a2m,   LoweringOp::b1hat_m,
    LoweringOp::b2hat_m, LoweringOp::chat_m, LoweringOp::dhat_m,
};

const char* lowering_op_name(LoweringOp op);

// Grade removed by the operator: a1 (1,0), a2 (0,1), b1hat (2,0),
// b2hat (0,2), chat (1,1), dhat (1,-1).
GradeVector op_grade(LoweringOp op);

GradeVector grade_of_key(const BasisKey& key);

Weight weight_of_key(const Weight& lw, const BasisKey& key);

// Every key of grade exactly (p1,p2), lexicographic on (k1,...,n2);
// empty when p1 < 0 or p2 < -p1.
std::vector<BasisKey> enumerate_grade(int p1, int p2);

ModuleVector act(LoweringOp op, const ModuleVector& v);

bool is_grade_homogeneous(const ModuleVector& v);

// True iff v != 0 and all six lowering operators annihilate it.
// Throws std::invalid_argument unless v is grade-homogeneous.
bool is_singular(const ModuleVector& v);

nlohmann::json to_json(const ModuleVector& v);
ModuleVector module_vector_from_json(const nlohmann::json& j);

}  // namespace g2v
