#pragma once

// Exact sparse matrices over a field scalar (Rational or Cyclotomic) with
// pivot-normalizing Gaussian elimination for rank and kernel. The scalar
// type is fixed per matrix at compile time, so mixed-field matrices are
// rejected by the type system rather than at runtime.

#include "blob/cyclotomic.hpp"
#include "blob/scalars.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace blob {

inline bool scalar_is_zero(const Rational& r) { return is_zero(r); }
inline bool scalar_is_zero(const Cyclotomic& c) { return c.is_zero(); }

template <typename S>
struct RankKernel {
    long rank = 0;
    std::vector<std::vector<S>> kernel_basis;  // each vector has length cols
};

template <typename S>
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static ExactMatrix identity(long n, const S& one) {
        ExactMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.set(i, i, one);
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const std::map<std::pair<long, long>, S>& entries() const { return entries_; }

    void set(long r, long c, S v) {
        check_index(r, c);
        if (scalar_is_zero(v))
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    S get(long r, long c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) return S();
        return it->second;
    }

    void add_to(long r, long c, const S& v) {
        check_index(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (!scalar_is_zero(v)) entries_[{r, c}] = v;
            return;
        }
        it->second += v;
        if (scalar_is_zero(it->second)) entries_.erase(it);
    }

    bool is_zero() const { return entries_.empty(); }

    ExactMatrix transposed() const {
        ExactMatrix out(cols_, rows_);
        for (const auto& [rc, v] : entries_) out.entries_[{rc.second, rc.first}] = v;
        return out;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        // Row-major sparse product.
        std::vector<std::map<long, S>> brows(b.rows_);
        for (const auto& [rc, v] : b.entries_) brows[rc.first][rc.second] = v;
        ExactMatrix out(a.rows_, b.cols_);
        std::map<long, std::map<long, S>> acc;
        for (const auto& [rc, va] : a.entries_) {
            for (const auto& [c, vb] : brows[rc.second]) {
                S prod = va * vb;
                auto [it, inserted] = acc[rc.first].try_emplace(c, prod);
                if (!inserted) it->second += prod;
            }
        }
        for (auto& [r, row] : acc)
            for (auto& [c, v] : row)
                if (!scalar_is_zero(v)) out.entries_[{r, c}] = std::move(v);
        return out;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        ExactMatrix out = a;
        for (const auto& [rc, v] : b.entries_) out.add_to(rc.first, rc.second, v);
        return out;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        ExactMatrix out = a;
        for (const auto& [rc, v] : b.entries_) out.add_to(rc.first, rc.second, -v);
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    friend ExactMatrix operator*(const S& scalar, const ExactMatrix& m) {
        ExactMatrix out(m.rows_, m.cols_);
        if (scalar_is_zero(scalar)) return out;
        for (const auto& [rc, v] : m.entries_) out.entries_[rc] = scalar * v;
        return out;
    }

    // `one` is the field unit; the cyclotomic field needs it spelled out
    // because a unit carries the conductor.
    RankKernel<S> rank_and_kernel(const S& one) const {
        std::vector<std::vector<S>> a;
        std::vector<long> pivot_col_of_row;
        rref(a, pivot_col_of_row);
        long r = static_cast<long>(pivot_col_of_row.size());

        RankKernel<S> out;
        out.rank = r;
        const S zero = one - one;
        std::vector<bool> is_pivot(cols_, false);
        for (long pc : pivot_col_of_row) is_pivot[pc] = true;
        for (long c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<S> vec(cols_, zero);
            vec[c] = one;
            for (long i = 0; i < r; ++i) {
                long pc = pivot_col_of_row[i];
                vec[pc] = -a[i][c];
            }
            out.kernel_basis.push_back(std::move(vec));
        }
        return out;
    }

    long rank() const {
        std::vector<std::vector<S>> a;
        std::vector<long> pivots;
        rref(a, pivots);
        return static_cast<long>(pivots.size());
    }

  private:
    long rows_, cols_;
    std::map<std::pair<long, long>, S> entries_;  // nonzero entries only

    void check_index(long r, long c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
    }

    // Dense row-reduced echelon form with exact division. All cells are
    // seeded with a zero derived from an actual entry so that cyclotomic
    // cells share one conductor.
    void rref(std::vector<std::vector<S>>& a, std::vector<long>& pivot_col_of_row) const {
        S zero = entries_.empty() ? S() : entries_.begin()->second - entries_.begin()->second;
        a.assign(rows_, std::vector<S>(cols_, zero));
        for (const auto& [rc, v] : entries_) a[rc.first][rc.second] = v;
        pivot_col_of_row.clear();
        long r = 0;
        for (long c = 0; c < cols_ && r < rows_; ++c) {
            long piv = -1;
            for (long i = r; i < rows_; ++i)
                if (!scalar_is_zero(a[i][c])) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(a[piv], a[r]);
            S lead = a[r][c];
            for (long j = c; j < cols_; ++j) a[r][j] /= lead;
            for (long i = 0; i < rows_; ++i) {
                if (i == r || scalar_is_zero(a[i][c])) continue;
                S f = a[i][c];
                for (long j = c; j < cols_; ++j) a[i][j] -= f * a[r][j];
            }
            pivot_col_of_row.push_back(c);
            ++r;
        }
    }
};

inline RankKernel<Rational> rank_and_kernel(const ExactMatrix<Rational>& m) {
    return m.rank_and_kernel(Rational(1));
}

}  // namespace blob
