#include "g2v/singular.hpp"

#include "g2v/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2v {

void SvType::validate() const {
    switch (kind) {
        case Kind::i:
        case Kind::ii:
        case Kind::iv:
        case Kind::v:
            if (p < 1) throw std::invalid_argument("type parameter must be a positive integer");
            return;
        case Kind::iii:
            if (p < 1 || q < 1)
                throw std::invalid_argument("type parameters must be positive integers");
            if (p == q || p == 2 * q)
                throw std::invalid_argument("type iii requires p3 != q3 and p3 != 2*q3");
            return;
    }
    throw std::invalid_argument("unknown type");
}

const char* SvType::name() const {
    switch (kind) {
        case Kind::i:   return "i";
        case Kind::ii:  return "ii";
        case Kind::iii: return "iii";
        case Kind::iv:  return "iv";
        case Kind::v:   return "v";
    }
    return "?";
}

int SvType::digit() const { return static_cast<int>(kind) + 1; }

GradeVector sv_grade(const SvType& t) {
    switch (t.kind) {
        case SvType::Kind::i:   return {t.p, -t.p};
        case SvType::Kind::ii:  return {0, 2 * t.p};
        case SvType::Kind::iii: return {t.p, 2 * t.q - t.p};
        case SvType::Kind::iv:  return {t.p, t.p};
        case SvType::Kind::v:   return {2 * t.p, 0};
    }
    return {0, 0};
}

bool weight_matches(const SvType& t, const Weight& lw) {
    const Rational& L1 = lw.lambda1;
    const Rational& L2 = lw.lambda2;
    switch (t.kind) {
        case SvType::Kind::i:
            return L1 - L2 == frac(1 - t.p, 2);
        case SvType::Kind::ii:
            return L2 == Rational(3, 4) - frac(t.p, 2);
        case SvType::Kind::iii:
            return L1 == Rational(5, 4) - frac(t.p - t.q, 2) &&
                   L2 == Rational(3, 4) - frac(t.q, 2);
        case SvType::Kind::iv:
            return L1 + L2 == 2 - frac(t.p, 2);
        case SvType::Kind::v:
            return L1 == Rational(5, 4) - frac(t.p, 2);
    }
    return false;
}

Weight type_weight(const SvType& t) {
    t.validate();
    if (t.kind != SvType::Kind::iii)
        throw std::domain_error(
            "only type iii determines the lowest weight completely");
    return {Rational(5, 4) - frac(t.p - t.q, 2),
            Rational(3, 4) - frac(t.q, 2)};
}

Rational general_coeff(const Weight& lw, int p1, int k, int n) {
    if (k < 0 || n < 0 || p1 - 2 * k - n < 0)
        throw std::invalid_argument("(k,n) outside the coefficient triangle");
    const Rational& L1 = lw.lambda1;
    const Rational& L2 = lw.lambda2;
    Rational den = rising_factorial(4 * L1 + 2 * p1 - 2 * k - n - 4, 2 * k + n);
    if (den == 0)
        throw std::domain_error("coefficient formula has a pole at this weight");
    Rational c = factorial(p1) / factorial(p1 - 2 * k - n);
    c *= rising_factorial(2 * L1 + p1 - k - n - Rational(3, 2), k + n);
    c *= rising_factorial(2 * L2 - 2 * L1 - p1 + 1, 2 * k + n);
    c /= den;
    c /= factorial(k) * factorial(n);
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    c /= Rational(four_k);
    if (n % 2 != 0) c = -c;
    return c;
}

namespace {

bool in_region(const SvType& t, int k, int n) {
    if (k < 0 || n < 0) return false;
    switch (t.kind) {
        case SvType::Kind::i:
        case SvType::Kind::ii:
            return k == 0 && n == 0;
        case SvType::Kind::iii: {
            int p = t.p, q = t.q;
            if (p < q) return 2 * k <= p && n <= p - 2 * k;
            if (p < 2 * q)
                return (k <= p - q && n <= q - k) ||
                       (k >= p - q + 1 && 2 * k <= p && n <= p - 2 * k);
            return k <= q && n <= q - k;
        }
        case SvType::Kind::iv:
            return 2 * k <= t.p && n <= t.p - 2 * k;
        case SvType::Kind::v:
            return k <= t.p && n <= t.p - k;
    }
    return false;
}

Rational pow4(int k) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 4, static_cast<unsigned long>(k));
    return Rational(v);
}

}  // namespace

std::vector<std::pair<int, int>> summation_region(const SvType& t) {
    t.validate();
    std::vector<std::pair<int, int>> region;
    int kmax = (t.kind == SvType::Kind::v) ? t.p : t.p / 2;
    if (t.kind == SvType::Kind::i || t.kind == SvType::Kind::ii) kmax = 0;
    if (t.kind == SvType::Kind::iii && 2 * t.q < t.p) kmax = t.q;
    for (int k = 0; k <= kmax; ++k)
        for (int n = 0; in_region(t, k, n); ++n) region.emplace_back(k, n);
    return region;
}

Rational closed_form_coeff(const SvType& t, const Weight& lw, int k, int n) {
    t.validate();
    if (!in_region(t, k, n))
        throw std::invalid_argument("(k,n) outside the summation region");
    switch (t.kind) {
        case SvType::Kind::i:
        case SvType::Kind::ii:
            return 1;
        case SvType::Kind::iii:
            return factorial(t.p) * factorial(t.q) /
                   (pow4(k) * factorial(k) * factorial(n) *
                    factorial(t.p - 2 * k - n) * factorial(t.q - k - n));
        case SvType::Kind::iv: {
            Rational c = factorial(t.p) / (pow4(k) * factorial(k) * factorial(n) *
                                           factorial(t.p - 2 * k - n));
            c *= rising_factorial(
                2 * lw.lambda1 + t.p - Rational(3, 2) - (k + n), k + n);
            return c;
        }
        case SvType::Kind::v: {
            Rational c = factorial(t.p) /
                         (pow4(k) * factorial(k) * factorial(n) *
                          factorial(t.p - k - n));
            c *= rising_factorial(2 * lw.lambda2 - t.p - Rational(3, 2),
                                  2 * k + n);
            if (n % 2 != 0) c = -c;
            return c;
        }
    }
    throw std::invalid_argument("unknown type");
}

ModuleVector closed_form_sv(const SvType& t, const Weight& lw) {
    t.validate();
    if (!weight_matches(t, lw))
        throw std::domain_error("lowest weight does not satisfy the type condition");
    ModuleVector v;
    v.weight = lw;
    switch (t.kind) {
        case SvType::Kind::i:
            v.add({0, 0, 0, 0, 0, t.p}, 1);
            return v;
        case SvType::Kind::ii:
            v.add({0, t.p, 0, 0, 0, 0}, 1);
            return v;
        case SvType::Kind::iii:
            for (auto [k, n] : summation_region(t))
                v.add({k, t.q - k - n, 0, 0, n, t.p - 2 * k - n},
                      closed_form_coeff(t, lw, k, n));
            return v;
        case SvType::Kind::iv:
            for (auto [k, n] : summation_region(t))
                v.add({k, t.p - k - n, 0, 0, n, t.p - 2 * k - n},
                      closed_form_coeff(t, lw, k, n));
            return v;
        case SvType::Kind::v:
            for (auto [k, n] : summation_region(t))
                v.add({k, t.p - k - n, 0, 0, n, 2 * t.p - 2 * k - n},
                      closed_form_coeff(t, lw, k, n));
            return v;
    }
    throw std::invalid_argument("unknown type");
}

Rational CoeffTable::at(int k, int n) const {
    auto it = entries.find({k, n});
    return it == entries.end() ? Rational(0) : it->second;
}

bool recurrence_holds(int which, const CoeffTable& c, const Weight& lw, int p1,
                      int rho) {
    if (which < 1 || which > 4)
        throw std::invalid_argument("recurrence index must be 1..4");
    if (c.entries.empty()) return true;
    const Rational& L1 = lw.lambda1;
    const Rational& L2 = lw.lambda2;
    int kmin = 0, kmax = 0, nmin = 0, nmax = 0;
    bool first = true;
    for (const auto& [kn, val] : c.entries) {
        auto [k, n] = kn;
        if (first) {
            kmin = kmax = k;
            nmin = nmax = n;
            first = false;
        }
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
        nmin = std::min(nmin, n);
        nmax = std::max(nmax, n);
    }
    int rho_bar = p1 - rho;
    for (int k = kmin - 2; k <= kmax + 2; ++k) {
        for (int n = nmin - 2; n <= nmax + 2; ++n) {
            Rational lam_t = L2 - L1 - frac(p1 - 2 * k - n - 1, 2);
            Rational r = 0;
            switch (which) {
                case 1:
                    r = 4 * (k + 1) *
                            (2 * L1 + p1 - k - Rational(5, 2)) *
                            c.at(k + 1, n - 1) +
                        2 * n * (p1 - 2 * k - n) * lam_t * c.at(k, n) +
                        n * (n + 1) * c.at(k, n + 1);
                    break;
                case 2:
                    r = 4 * (rho - k - n) *
                            (2 * L2 - rho_bar + k + n - Rational(3, 2)) *
                            c.at(k, n) +
                        (n + 1) * (n + 2) * c.at(k - 1, n + 2) +
                        4 * (n + 1) * c.at(k, n + 1);
                    break;
                case 3:
                    r = (n + 1) *
                            (L1 + L2 + rho - frac(n, 2) - Rational(3, 2)) *
                            c.at(k, n + 1) +
                        (rho - k - n) * (p1 - 2 * k - n) * lam_t * c.at(k, n) +
                        2 * (k + 1) * c.at(k + 1, n) +
                        2 * (k + 1) * (rho - k - n) * c.at(k + 1, n - 1);
                    break;
                case 4:
                    r = 2 * (k + 1) * c.at(k + 1, n - 1) +
                        (n + 1) * c.at(k, n + 1) +
                        (p1 - 2 * k - n) * lam_t * c.at(k, n);
                    break;
            }
            if (r != 0) return false;
        }
    }
    return true;
}

bool recurrences_hold(const CoeffTable& c, const Weight& lw, int p1, int rho) {
    for (int which = 1; which <= 4; ++which)
        if (!recurrence_holds(which, c, lw, p1, rho)) return false;
    return true;
}

std::vector<ModuleVector> brute_force_sv(const Weight& lw, int p1, int p2) {
    std::vector<BasisKey> keys = enumerate_grade(p1, p2);
    std::vector<ModuleVector> result;
    if (keys.empty()) return result;

    std::map<BasisKey, int> col_of;
    for (int j = 0; j < static_cast<int>(keys.size()); ++j)
        col_of.emplace(keys[j], j);

    // Stack the six lowering actions: one row per (operator, output key).
    std::vector<SparseRow> rows;
    for (LoweringOp op : all_lowering_ops) {
        std::map<BasisKey, SparseRow> out_rows;
        for (int j = 0; j < static_cast<int>(keys.size()); ++j) {
            ModuleVector unit;
            unit.weight = lw;
            unit.add(keys[j], 1);
            for (const auto& [okey, coeff] : act(op, unit).terms)
                out_rows[okey].emplace_back(j, coeff);
        }
        for (auto& [okey, row] : out_rows) rows.push_back(std::move(row));
    }

    for (const auto& vec : nullspace(rows, static_cast<int>(keys.size()))) {
        ModuleVector v;
        v.weight = lw;
        for (int j = 0; j < static_cast<int>(keys.size()); ++j)
            v.add(keys[j], vec[j]);
        result.push_back(std::move(v));
    }
    return result;
}

}  // namespace g2v
