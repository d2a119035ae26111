#pragma once

#include "g2v/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace g2v {

// Basis of the 14-dimensional rank-2 Jacobi algebra: two-mode Heisenberg
// creation/annihilation pairs plus the ten sp(4) generators. Suffix p/m is
// the +/- superscript.
enum class Generator {
    a1p, a2p, a1m, a2m,
    b1p, b2p, b1m, b2m,
    cp, cm, dp, dm,
    h1, h2
};

inline constexpr std::array<Generator, 14> all_generators = {
    Generator::a1p, Generator::a2p, Generator::a1m, Generator::a2m,
    Generator::b1p, Generator::b2p, Generator::b1m, Generator::b2m,
    Generator::cp,  Generator::cm,  Generator::dp,  Generator::dm,
    Generator::h1,  Generator::h2,
};

const char* generator_name(Generator g);

// Integer coordinates (p1, p2) in the (delta_1, delta_2) basis,
// delta_1 = (1/2, 0), delta_2 = (0, 1/2).
struct GradeVector {
    int p1 = 0;
    int p2 = 0;

    friend GradeVector operator+(GradeVector a, GradeVector b) {
        return {a.p1 + b.p1, a.p2 + b.p2};
    }
    friend GradeVector operator-(GradeVector a, GradeVector b) {
        return {a.p1 - b.p1, a.p2 - b.p2};
    }
    friend bool operator==(GradeVector, GradeVector) = default;
    friend auto operator<=>(GradeVector, GradeVector) = default;
};

// Element of the algebra extended by the Heisenberg central term:
// sum of generator terms plus a scalar multiple of the unit.
struct LinComb {
    std::map<Generator, Rational> terms;
    Rational scalar = 0;

    void add(Generator g, const Rational& c);
    LinComb& operator+=(const LinComb& o);
    LinComb operator-() const;
    LinComb operator*(const Rational& c) const;
    bool is_zero() const;
    friend bool operator==(const LinComb& a, const LinComb& b);
    std::string str() const;
};

// [x, y], exactly as tabulated; total on all generator pairs.
LinComb commutator(Generator x, Generator y);

// [x, v] by linear extension; the central term commutes with everything.
LinComb commutator(Generator x, const LinComb& v);

GradeVector adjoint_grade(Generator g);

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero for a consistent table.
LinComb jacobiator(Generator x, Generator y, Generator z);

}  // namespace g2v
