#pragma once
#include <algorithm>
#include <cassert>
#include <functional>
#include <initializer_list>

#include "cdv/common.hpp"

namespace cdv {

// Dense square integer matrix, row-major.  Small ranks only (cluster data);
// value semantics throughout.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) { assert(n >= 0); }
    IntMatrix(int n, std::initializer_list<i64> vals) : n_(n), a_(vals) {
        assert(static_cast<int>(a_.size()) == n * n);
    }
    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        IntMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            assert(static_cast<int>(rows[i].size()) == m.n_);
            for (int j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int n() const { return n_; }
    i64& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    i64 operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const i64* data() const { return a_.data(); }
    i64* data() { return a_.data(); }
    const IntVec& flat() const { return a_; }

    IntVec column(int j) const {
        IntVec c(n_);
        for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    IntVec row(int i) const {
        return IntVec(a_.begin() + static_cast<size_t>(i) * n_,
                      a_.begin() + static_cast<size_t>(i + 1) * n_);
    }

    IntMatrix negated() const {
        IntMatrix m(n_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = checked_neg(a_[i]);
        return m;
    }
    IntMatrix transposed() const {
        IntMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    // Simultaneous row/column relabeling: out(i,j) = in(perm[i], perm[j]).
    IntMatrix permuted(const std::vector<int>& perm) const {
        IntMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = (*this)(perm[i], perm[j]);
        return m;
    }
    // Column relabeling only: out(i,j) = in(i, perm[j]).
    IntMatrix columns_permuted(const std::vector<int>& perm) const {
        IntMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, perm[j]);
        return m;
    }

    i64 max_abs() const {
        i64 m = 0;
        for (i64 v : a_) m = std::max(m, v < 0 ? checked_neg(v) : v);
        return m;
    }

    bool operator==(const IntMatrix& o) const = default;
    auto operator<=>(const IntMatrix& o) const = default;

  private:
    int n_ = 0;
    IntVec a_;
};

struct IntMatrixHash {
    size_t operator()(const IntMatrix& m) const {
        // FNV-1a over the raw entries; dedup containers always compare full keys.
        size_t h = 1469598103934665603ull;
        for (i64 v : m.flat()) {
            auto u = static_cast<std::uint64_t>(v);
            for (int b = 0; b < 8; ++b) {
                h ^= (u >> (8 * b)) & 0xff;
                h *= 1099511628211ull;
            }
        }
        return h;
    }
};

}  // namespace cdv
