#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "flatmod/numeric.hpp"

namespace flatmod {

// Dense exact matrix.  T is Int or Rat; everything is small (n <= ~20 ambient,
// class matrices a few dozen rows), so no attempt at sparsity or fraction-free
// cleverness outside the normal-form routines.
template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw InternalInconsistency("ragged matrix literal");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat zero(int r, int c) { return Mat(r, c); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw InternalInconsistency("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != static_cast<int>(v.size()))
            throw InternalInconsistency("matrix-vector shape mismatch");
        std::vector<T> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    Mat scaled(const T& c) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    std::vector<T> row(int i) const {
        std::vector<T> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    void set_col(int j, const std::vector<T>& v) {
        for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const {
        for (const auto& x : a_) if (x != 0) return false;
        return true;
    }
    bool is_identity() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    T trace() const {
        T t = 0;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    // Lexicographic order on (rows, cols, entries); used only to make
    // element enumerations and map keys deterministic.
    bool lex_less(const Mat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
        return false;
    }

    const std::vector<T>& flat() const { return a_; }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InternalInconsistency("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);
// Throws InternalInconsistency if any entry has a denominator.
IntMat to_int(const RatMat& m);
IntVec to_int(const RatVec& v);
Int denominator_lcm(const RatMat& m);
Int denominator_lcm(const RatVec& v);

Rat det(const RatMat& m);
Int det(const IntMat& m);
bool is_unimodular(const IntMat& m);

// Gauss-Jordan to reduced row echelon form (first nonzero pivot per column,
// deterministic), returns rank.
int rref(RatMat& m);
int rank(const RatMat& m);
// Columns span ker(m); canonical free-variable parametrization from the RREF.
RatMat kernel(const RatMat& m);
// Particular solution of m x = b with free variables set to 0, if consistent.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);
std::optional<RatMat> solve(const RatMat& m, const RatMat& b);
std::optional<RatMat> inverse(const RatMat& m);
std::optional<IntMat> inverse_unimodular(const IntMat& m);

// Canonical basis of the column space: RREF of the transpose, transposed back.
RatMat column_space_basis(const RatMat& m);
// True if v lies in the column span of m.
bool in_column_span(const RatMat& m, const RatVec& v);

RatMat hstack(const RatMat& a, const RatMat& b);
RatMat vstack(const RatMat& a, const RatMat& b);
IntMat hstack(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);
RatMat from_columns(int rows, const std::vector<RatVec>& cols);
IntMat from_columns(int rows, const std::vector<IntVec>& cols);

}  // namespace flatmod
