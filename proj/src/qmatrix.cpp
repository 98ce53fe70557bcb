#include "fmzv/qmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace fmzv {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DimensionError("QMatrix: entry count mismatch");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("QMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QVector QMatrix::row(std::size_t i) const {
    return QVector(entries_.begin() + static_cast<long>(i * cols_),
                   entries_.begin() + static_cast<long>((i + 1) * cols_));
}

std::string QMatrix::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << to_string((*this)(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string QMatrix::to_json() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << '"' << to_string((*this)(i, j)) << '"';
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Rational det_exact(const QMatrix& m) {
    if (!m.square()) throw DimensionError("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t j = 0; j < n; ++j) {
        Integer l = 1;
        for (std::size_t i = 0; i < n; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t i = 0; i < n; ++i) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Rational d(a[n * n - 1] * sign, scale);
    d.canonicalize();
    return d;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RankKernel rank_and_kernel(const QMatrix& m) {
    RowEchelon ech(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
    RankKernel out;
    out.rank = ech.rank();
    const auto rows = ech.sorted_rows();
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (ech.is_pivot(f)) continue;
        QVector v(m.cols());
        v[f] = 1;
        for (const auto& r : rows) {
            const auto p = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](const Rational& q) { return sgn(q) != 0; }) - r.begin());
            v[p] = -r[f];
        }
        auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
        const Rational c = *lead;
        for (auto& x : v) x /= c;
        out.kernel.push_back(std::move(v));
    }
    return out;
}

bool two_adic_certificate(const QMatrix& m) {
    if (!m.square()) throw DimensionError("two_adic_certificate: matrix is not square");
    const std::size_t n = m.rows();
    for (std::size_t j = 0; j < n; ++j) {
        const Valuation d = nu_p(2, m(j, j));
        if (d.infinite || d.value > 0) return false;
        for (std::size_t i = 0; i < n; ++i) {
            const Valuation v = nu_p(2, m(i, j));
            if (v < d) return false;
            if (i > j && v < Valuation::of(1)) return false;
        }
    }
    return true;
}

QVector RowEchelon::reduce(QVector v) const {
    if (v.size() != cols_) throw DimensionError("RowEchelon: vector length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (sgn(v[p]) == 0) continue;
        const Rational c = v[p];
        const QVector& r = rows_[k];
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(r[j]) != 0) v[j] -= c * r[j];
    }
    return v;
}

bool RowEchelon::in_span(const QVector& v) const { return is_zero(reduce(v)); }

bool RowEchelon::insert(QVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && sgn(v[p]) == 0) ++p;
    if (p == cols_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v)
        if (sgn(x) != 0) x *= inv;
    for (auto& r : rows_) {
        if (sgn(r[p]) == 0) continue;
        const Rational c = r[p];
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0) r[j] -= c * v[j];
    }
    pivot_of_col_[p] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

std::vector<QVector> RowEchelon::sorted_rows() const {
    std::vector<QVector> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_of_col_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_of_col_[c])]);
    return out;
}

}  // namespace fmzv
