#include "knv/linalg.hpp"


namespace knv {

std::optional<std::vector<RingElem>> solve_linear(std::vector<std::vector<RingElem>> m,
                                                  std::vector<RingElem> b) {
    const size_t rows = m.size();
    if (rows == 0) return std::vector<RingElem>{};
    const size_t cols = m[0].size();
    if (b.size() != rows) throw DomainError("solve_linear: shape mismatch");

    size_t row = 0;
    std::vector<size_t> pivot_row(cols, size_t(-1));
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        std::swap(b[p], b[row]);
        RingElem inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            RingElem f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            b[i] -= f * b[row];
        }
        pivot_row[col] = row;
        ++row;
    }
    // unique solution requires a pivot in every column
    for (size_t col = 0; col < cols; ++col)
        if (pivot_row[col] == size_t(-1)) return std::nullopt;
    // leftover rows must be consistent
    for (size_t i = row; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<RingElem> x(cols);
    for (size_t col = 0; col < cols; ++col) x[col] = b[pivot_row[col]];
    return x;
}

std::vector<std::vector<RingElem>> kernel_basis(std::vector<std::vector<RingElem>> m) {
    const size_t rows = m.size();
    if (rows == 0) return {};
    const size_t cols = m[0].size();
    std::vector<long> pivot_of_col(cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        RingElem inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            RingElem f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_of_col[col] = long(row);
        ++row;
    }
    std::vector<std::vector<RingElem>> basis;
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] != -1) continue;
        std::vector<RingElem> v(cols);
        v[col] = RingElem(1);
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] != -1) v[c] = -m[size_t(pivot_of_col[c])][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<RingElem>> constant_relations(const std::vector<RingElem>& elems) {
    const size_t n = elems.size();
    if (n == 0) return {};

    // Clear denominators: with D = lcm of the denominators, a constant
    // relation among the elems is the same thing as one among the D*elems,
    // which are polynomials.
    Poly den_lcm(Coeff(1));
    for (const auto& e : elems) den_lcm = divexact(den_lcm * e.den(), poly_gcd(den_lcm, e.den()));

    // Bucket the cleared elements by jet monomial. Each bucket is one row of
    // the coefficient matrix; its entries are polynomials in the parameters.
    struct MonGrlexLess {
        bool operator()(const Monomial& a, const Monomial& b) const { return cmp_grlex(a, b) < 0; }
    };
    std::map<Monomial, std::vector<std::vector<Term>>, MonGrlexLess> buckets;
    for (size_t i = 0; i < n; ++i) {
        if (elems[i].is_zero()) continue;
        Poly f = elems[i].num() * divexact(den_lcm, elems[i].den());
        for (const auto& t : f.terms()) {
            Monomial jm, pm;
            for (const auto& [var, exp] : t.mon.e) {
                Monomial& dst = VarId{var}.is_jet() ? jm : pm;
                dst.e.emplace_back(var, exp);
                dst.deg += exp;
            }
            auto& row = buckets[jm];
            if (row.empty()) row.resize(n);
            row[i].push_back({std::move(pm), t.coeff});
        }
    }

    // Incremental reduced row echelon form over Q(params); the relations are
    // the kernel of the matrix, read off the free columns.
    std::vector<std::vector<RingElem>> rref;
    std::vector<size_t> pivot;
    for (auto& [jm, bucket] : buckets) {
        if (rref.size() == n) break;
        std::vector<RingElem> row(n);
        for (size_t i = 0; i < n; ++i)
            if (!bucket[i].empty()) row[i] = RingElem(Poly::from_terms(std::move(bucket[i])));
        for (size_t k = 0; k < rref.size(); ++k) {
            if (row[pivot[k]].is_zero()) continue;
            RingElem f = row[pivot[k]];
            for (size_t j = 0; j < n; ++j) row[j] -= f * rref[k][j];
        }
        size_t c = 0;
        while (c < n && row[c].is_zero()) ++c;
        if (c == n) continue;
        RingElem inv = row[c].inverse();
        for (auto& x : row) x *= inv;
        for (size_t k = 0; k < rref.size(); ++k) {
            if (rref[k][c].is_zero()) continue;
            RingElem f = rref[k][c];
            for (size_t j = 0; j < n; ++j) rref[k][j] -= f * row[j];
        }
        pivot.push_back(c);
        rref.push_back(std::move(row));
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot) is_pivot[c] = true;
    std::vector<std::vector<RingElem>> basis;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<RingElem> v(n);
        v[c] = RingElem(1);
        for (size_t k = 0; k < rref.size(); ++k)
            if (pivot[k] < c) v[pivot[k]] = -rref[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<RingElem>> solve_constant_span(const RingElem& k,
                                                         const std::vector<RingElem>& basis) {
    std::vector<RingElem> all;
    all.reserve(basis.size() + 1);
    all.push_back(k);
    for (const auto& b : basis) all.push_back(b);
    for (const auto& rel : constant_relations(all)) {
        if (rel[0].is_zero()) continue;
        std::vector<RingElem> c(basis.size());
        RingElem inv = rel[0].inverse();
        for (size_t i = 0; i < basis.size(); ++i) c[i] = -(rel[i + 1] * inv);
        return c;
    }
    return std::nullopt;
}

}  // namespace knv
