#include "flatmod/normal_forms.hpp"

namespace flatmod {

namespace {

void swap_rows(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_axpy(IntMat& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntMat& m, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMat& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

void negate_col(IntMat& m, int c) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& m) {
    HermiteResult res{m, IntMat::identity(m.rows()), 0};
    IntMat& h = res.h;
    IntMat& u = res.u;
    int r = 0;
    for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
        // clear column c below row r, keeping the running gcd at row r
        for (;;) {
            int p = -1;
            for (int i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                if (p < 0 || abs(h.at(i, c)) < abs(h.at(p, c))) p = i;
            }
            if (p < 0) break;  // column all zero from r down
            swap_rows(h, r, p);
            swap_rows(u, r, p);
            bool dirty = false;
            for (int i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = fdiv(h.at(i, c), h.at(r, c));
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
                if (h.at(i, c) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = fdiv(h.at(i, c), h.at(r, c));
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult res{m, IntMat::identity(m.rows()), IntMat::identity(m.cols()), 0};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;
    int n = std::min(d.rows(), d.cols());
    int t = 0;
    while (t < n) {
        // pivot: smallest nonzero |entry| in the trailing block, row-major ties
        int pi = -1, pj = -1;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block zero
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = fdiv(d.at(i, t), d.at(t, t));
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d.at(i, t) != 0) {  // remainder smaller than pivot: promote it
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = fdiv(d.at(t, j), d.at(t, t));
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    clean = false;
                }
            }
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        // divisibility: fold any non-multiple into the working row and redo
        bool retry = false;
        for (int i = t + 1; i < d.rows() && !retry; ++i)
            for (int j = t + 1; j < d.cols() && !retry; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_axpy(d, t, i, Int(-1));  // row t += row i
                    row_axpy(u, t, i, Int(-1));
                    retry = true;
                }
        if (!retry) ++t;
    }
    res.rank = t;
    // canonical sign for the transforms is not required; diagonal is canonical
    return res;
}

IntMat int_kernel(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    int free = m.cols() - s.rank;
    IntMat k(m.cols(), free);
    for (int idx = 0; idx < free; ++idx)
        for (int i = 0; i < m.cols(); ++i) k.at(i, idx) = s.v.at(i, s.rank + idx);
    return k;
}

IntMat column_lattice_basis(const IntMat& m) {
    HermiteResult h = hermite_normal_form(m.transpose());
    IntMat b(m.rows(), h.rank);
    for (int r = 0; r < h.rank; ++r)
        for (int i = 0; i < m.rows(); ++i) b.at(i, r) = h.h.at(r, i);
    return b;
}

IntMat saturate_columns(const IntMat& m) {
    // span_Q(m) ∩ Z^n is the kernel of the transpose of the kernel of m^T.
    IntMat k = int_kernel(m.transpose());
    if (k.cols() == 0) return IntMat::identity(m.rows());
    return column_lattice_basis(int_kernel(k.transpose()));
}

FiniteAbelianGroup FiniteAbelianGroup::from_relations(const std::vector<Int>& diag,
                                                      int generators) {
    FiniteAbelianGroup g;
    int nonzero = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d != 1) g.invariant_factors.push_back(d);
    }
    g.free_rank = generators - nonzero;
    return g;
}

Int FiniteAbelianGroup::order() const {
    if (free_rank > 0) throw InternalInconsistency("order of infinite abelian group");
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

std::string FiniteAbelianGroup::display() const {
    if (is_trivial()) return "1";
    std::string s;
    if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const Int& d : invariant_factors) {
        if (!s.empty()) s += " x ";
        s += "Z/" + d.get_str();
    }
    return s;
}

}  // namespace flatmod
