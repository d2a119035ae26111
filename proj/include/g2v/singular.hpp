#pragma once

#include "g2v/rational.hpp"
#include "g2v/verma.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2v {

// One of the five reducibility types, with its positive integer parameters.
// p carries p1/p2/p3/p4/p5 depending on the kind; q is the second parameter
// of kind iii and unused otherwise.
struct SvType {
    enum class Kind { i, ii, iii, iv, v };

    Kind kind = Kind::i;
    int p = 0;
    int q = 0;

    // throws std::invalid_argument on non-positive parameters or on the
    // kind-iii exclusions p = q, p = 2q
    void validate() const;

    const char* name() const;  // "i".."v"
    int digit() const;         // 1..5

    friend bool operator==(const SvType&, const SvType&) = default;
    friend auto operator<=>(const SvType&, const SvType&) = default;
};

// Grade of the singular vector of the given type:
// i (p,-p), ii (0,2p), iii (p,2q-p), iv (p,p), v (2p,0).
GradeVector sv_grade(const SvType& t);

// Whether lw satisfies the type's lowest-weight condition.
bool weight_matches(const SvType& t, const Weight& lw);

// The lowest weight fully determined by a kind-iii type; other kinds leave
// one component free and throw std::domain_error.
Weight type_weight(const SvType& t);

// Coefficient c(k,n) of the generic grade-(p1,*) ansatz, normalized to
// c(0,0) = 1. Defined on the triangle k,n >= 0, 2k+n <= p1
// (std::invalid_argument outside); throws std::domain_error when the
// inverted factor ratio hits a zero (4*Lambda1 at special integer values).
Rational general_coeff(const Weight& lw, int p1, int k, int n);

// The (k,n) summation region of the type's closed form, lexicographic.
std::vector<std::pair<int, int>> summation_region(const SvType& t);

// Closed-form coefficient at (k,n); std::invalid_argument outside the region.
Rational closed_form_coeff(const SvType& t, const Weight& lw, int k, int n);

// The closed-form singular vector of type t in V^lw; throws
// std::domain_error unless lw satisfies the type condition.
ModuleVector closed_form_sv(const SvType& t, const Weight& lw);

// Coefficient table over a (k,n) region; absent entries read as zero.
struct CoeffTable {
    std::map<std::pair<int, int>, Rational> entries;

    Rational at(int k, int n) const;
};

// Whether recurrence relation `which` (1..4) holds at every (k,n) around the
// table's region, with out-of-region reads as zero. Relations 2 and 3 use
// rho; 1 and 4 do not.
bool recurrence_holds(int which, const CoeffTable& c, const Weight& lw, int p1,
                      int rho);

// All four relations.
bool recurrences_hold(const CoeffTable& c, const Weight& lw, int p1, int rho);

// Exact nullspace of the six stacked lowering actions on the full grade
// space: every singular vector at grade (p1,p2) of V^lw, in canonical
// reduced echelon form over the keys in canonical order.
std::vector<ModuleVector> brute_force_sv(const Weight& lw, int p1, int p2);

}  // namespace g2v
