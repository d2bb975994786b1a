#include "tlr/matrix.hpp"

#include <string>

namespace tlr {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<fe_t> matvec(const Field& f, const Matrix& m, const std::vector<fe_t>& x) {
    if (x.size() != m.cols)
        throw ValidationError("matvec: vector length " + std::to_string(x.size()) + " != cols " +
                              std::to_string(m.cols));
    std::vector<fe_t> y(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        fe_t acc = 0;
        const fe_t* row = m.a.data() + r * m.cols;
        for (std::size_t c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(row[c], x[c]));
        y[r] = acc;
    }
    return y;
}

Matrix matmul(const Field& f, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols != rhs.rows) throw ValidationError("matmul: inner dimensions differ");
    Matrix out(lhs.rows, rhs.cols);
    for (std::size_t i = 0; i < lhs.rows; ++i)
        for (std::size_t k = 0; k < lhs.cols; ++k) {
            const fe_t v = lhs.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, rhs.at(k, j)));
        }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

std::size_t rank(const Field& f, Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        const fe_t s = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const fe_t v = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(v, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    const std::size_t n = m.rows;
    Matrix work = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && work.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(work.at(c, j), work.at(pivot, j));
            std::swap(inv.at(c, j), inv.at(pivot, j));
        }
        const fe_t s = f.inv(work.at(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            work.at(c, j) = f.mul(work.at(c, j), s);
            inv.at(c, j) = f.mul(inv.at(c, j), s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work.at(i, c) == 0) continue;
            const fe_t v = work.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) = f.add(work.at(i, j), f.mul(v, work.at(c, j)));
                inv.at(i, j) = f.add(inv.at(i, j), f.mul(v, inv.at(c, j)));
            }
        }
    }
    return inv;
}

std::vector<std::size_t> independent_rows(const Field& f, const Matrix& m) {
    // Incremental elimination over a basis; a row joins the result iff it is
    // independent of the rows already kept.
    std::vector<std::vector<fe_t>> basis;    // reduced rows
    std::vector<std::size_t> pivot_col;      // pivot column of each basis row
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < m.rows && kept.size() < m.cols; ++r) {
        std::vector<fe_t> row(m.a.begin() + static_cast<std::ptrdiff_t>(r * m.cols),
                              m.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols));
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const fe_t v = row[pivot_col[b]];
            if (v == 0) continue;
            for (std::size_t j = 0; j < m.cols; ++j) row[j] = f.add(row[j], f.mul(v, basis[b][j]));
        }
        std::size_t pc = m.cols;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (row[j] != 0) {
                pc = j;
                break;
            }
        if (pc == m.cols) continue;
        const fe_t s = f.inv(row[pc]);
        for (std::size_t j = 0; j < m.cols; ++j) row[j] = f.mul(row[j], s);
        basis.push_back(std::move(row));
        pivot_col.push_back(pc);
        kept.push_back(r);
    }
    return kept;
}

}  // namespace tlr
