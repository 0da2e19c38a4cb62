#include "flatmod/matrix.hpp"

namespace flatmod {

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            if (q.get_den() != 1) throw InternalInconsistency("non-integral matrix entry");
            r.at(i, j) = q.get_num();
        }
    return r;
}

IntVec to_int(const RatVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw InternalInconsistency("non-integral vector entry");
        r[i] = v[i].get_num();
    }
    return r;
}

Int denominator_lcm(const RatMat& m) {
    Int d = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = lcm(d, m.at(i, j).get_den());
    return d;
}

Int denominator_lcm(const RatVec& v) {
    Int d = 1;
    for (const Rat& q : v) d = lcm(d, q.get_den());
    return d;
}

Rat det(const RatMat& m) {
    if (!m.is_square()) throw InternalInconsistency("det of non-square matrix");
    RatMat a = m;
    int n = a.rows();
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) { p = r; break; }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Rat inv = 1 / a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c) == 0) continue;
            Rat f = a.at(r, c) * inv;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Int det(const IntMat& m) {
    // Hard-coded small cases cover the hot paths (unimodularity scans).
    if (!m.is_square()) throw InternalInconsistency("det of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (n == 3) {
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    }
    Rat d = det(to_rat(m));
    if (d.get_den() != 1) throw InternalInconsistency("integer det not integral");
    return d.get_num();
}

bool is_unimodular(const IntMat& m) {
    if (!m.is_square()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

int rref(RatMat& m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int p = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.at(r, c) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(rank, j));
        Rat inv = 1 / m.at(rank, c);
        for (int j = c; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, c) == 0) continue;
            Rat f = m.at(r, c);
            for (int j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

int rank(const RatMat& m) {
    RatMat a = m;
    return rref(a);
}

RatMat kernel(const RatMat& m) {
    RatMat a = m;
    int rk = rref(a);
    // locate pivot columns
    std::vector<int> pivot_col(rk), col_pivot(m.cols(), -1);
    for (int r = 0, c = 0; r < rk; ++r) {
        while (a.at(r, c) == 0) ++c;
        pivot_col[r] = c;
        col_pivot[c] = r;
    }
    RatMat k(m.cols(), m.cols() - rk);
    int idx = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (col_pivot[c] >= 0) continue;
        k.at(c, idx) = 1;
        for (int r = 0; r < rk; ++r) k.at(pivot_col[r], idx) = -a.at(r, c);
        ++idx;
    }
    return k;
}

std::optional<RatMat> solve(const RatMat& m, const RatMat& b) {
    if (m.rows() != b.rows()) throw InternalInconsistency("solve: shape mismatch");
    RatMat a = hstack(m, b);
    int rk = rref(a);
    // consistency: no pivot may fall in the b-block
    std::vector<int> pivot_col(rk);
    for (int r = 0, c = 0; r < rk; ++r) {
        while (a.at(r, c) == 0) ++c;
        if (c >= m.cols()) return std::nullopt;
        pivot_col[r] = c;
    }
    RatMat x(m.cols(), b.cols());
    for (int r = 0; r < rk; ++r)
        for (int j = 0; j < b.cols(); ++j) x.at(pivot_col[r], j) = a.at(r, m.cols() + j);
    return x;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
    RatMat bb(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) bb.at(i, 0) = b[i];
    auto x = solve(m, bb);
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (!m.is_square()) throw InternalInconsistency("inverse of non-square matrix");
    RatMat a = hstack(m, RatMat::identity(m.rows()));
    int rk = rref(a);
    if (rk != m.rows()) return std::nullopt;
    // every pivot must fall in the left block, else m itself is singular
    for (int r = 0, c = 0; r < rk; ++r) {
        while (a.at(r, c) == 0) ++c;
        if (c >= m.cols()) return std::nullopt;
    }
    RatMat inv(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = a.at(i, m.rows() + j);
    return inv;
}

std::optional<IntMat> inverse_unimodular(const IntMat& m) {
    if (!is_unimodular(m)) return std::nullopt;
    auto inv = inverse(to_rat(m));
    return to_int(*inv);
}

RatMat column_space_basis(const RatMat& m) {
    RatMat t = m.transpose();
    int rk = rref(t);
    RatMat b(m.rows(), rk);
    for (int r = 0; r < rk; ++r)
        for (int i = 0; i < m.rows(); ++i) b.at(i, r) = t.at(r, i);
    return b;
}

bool in_column_span(const RatMat& m, const RatVec& v) {
    return solve(m, v).has_value();
}

template <typename T>
static Mat<T> hstack_impl(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows()) throw InternalInconsistency("hstack: row mismatch");
    Mat<T> r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

template <typename T>
static Mat<T> vstack_impl(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.cols()) throw InternalInconsistency("vstack: col mismatch");
    Mat<T> r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

RatMat hstack(const RatMat& a, const RatMat& b) { return hstack_impl(a, b); }
RatMat vstack(const RatMat& a, const RatMat& b) { return vstack_impl(a, b); }
IntMat hstack(const IntMat& a, const IntMat& b) { return hstack_impl(a, b); }
IntMat vstack(const IntMat& a, const IntMat& b) { return vstack_impl(a, b); }

template <typename T>
static Mat<T> from_columns_impl(int rows, const std::vector<std::vector<T>>& cols) {
    Mat<T> m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw InternalInconsistency("from_columns: length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

RatMat from_columns(int rows, const std::vector<RatVec>& cols) {
    return from_columns_impl(rows, cols);
}
IntMat from_columns(int rows, const std::vector<IntVec>& cols) {
    return from_columns_impl(rows, cols);
}

}  // namespace flatmod
