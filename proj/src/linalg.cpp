#include "g2v/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2v {

namespace {

// r - c * p, both sorted by column
SparseRow subtract_scaled(const SparseRow& r, const Rational& c, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -c * p[j].second);
            ++j;
        } else {
            Rational v = r[i].second - c * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows,
                                             int cols) {
    // Forward elimination: echelon rows keyed by leading column, leading
    // coefficient normalized to 1. Incoming rows are reduced in the order
    // given, so the result is deterministic; the final reduced echelon form
    // is unique regardless of that order.
    std::map<int, SparseRow> echelon;
    for (const SparseRow& input : rows) {
        SparseRow r;
        r.reserve(input.size());
        for (const auto& e : input)
            if (e.second != 0) r.push_back(e);
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!r.empty()) {
            auto it = echelon.find(r.front().first);
            if (it == echelon.end()) break;
            r = subtract_scaled(r, r.front().second, it->second);
        }
        if (r.empty()) continue;
        if (r.front().first < 0 || r.front().first >= cols)
            throw std::invalid_argument("matrix entry outside column range");
        Rational inv = Rational(1) / r.front().second;
        for (auto& [col, val] : r) val *= inv;
        echelon.emplace(r.front().first, std::move(r));
    }

    // Back-substitution, descending leading column: clear every entry that
    // sits at another pivot column.
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        SparseRow& row = it->second;
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = 1; i < row.size(); ++i) {
                auto pit = echelon.find(row[i].first);
                if (pit == echelon.end()) continue;
                row = subtract_scaled(row, row[i].second, pit->second);
                again = true;
                break;
            }
        }
    }

    // Read off one nullspace vector per free column.
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (echelon.contains(f)) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (const auto& [lead, row] : echelon)
            for (const auto& [col, val] : row)
                if (col == f) v[lead] = -val;
        basis.push_back(std::move(v));
    }

    // Canonicalize: reduced echelon basis of the spanned space, leading
    // coordinate of each vector equal to 1.
    std::size_t pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < basis.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < basis.size() && basis[sel][col] == 0) ++sel;
        if (sel == basis.size()) continue;
        std::swap(basis[pivot_row], basis[sel]);
        Rational inv = Rational(1) / basis[pivot_row][col];
        for (int j = col; j < cols; ++j) basis[pivot_row][j] *= inv;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (r == pivot_row || basis[r][col] == 0) continue;
            Rational c = basis[r][col];
            for (int j = col; j < cols; ++j) basis[r][j] -= c * basis[pivot_row][j];
        }
        ++pivot_row;
    }
    return basis;
}

}  // namespace g2v
