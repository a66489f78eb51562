#include "cdv/kernels.hpp"

namespace cdv::kernels {
namespace {

// Reference kernels: exact, overflow-checked, rank-agnostic.

void mutate_b_scalar(const i64* B, i64* out, int n, int k) {
    for (int i = 0; i < n; ++i) {
        const i64 a = B[i * n + k];
        const i64 m = pos_part(checked_neg(a));
        for (int j = 0; j < n; ++j) {
            const i64 v = B[i * n + j];
            if (i == k || j == k) {
                out[i * n + j] = checked_neg(v);
            } else {
                const i64 bkj = B[k * n + j];
                i64 t = checked_add(v, checked_mul(a, pos_part(bkj)));
                out[i * n + j] = checked_add(t, checked_mul(m, bkj));
            }
        }
    }
}

void mutate_c_scalar(const i64* C, const i64* B, i64* out, int n, int k) {
    for (int i = 0; i < n; ++i) {
        const i64 a = C[i * n + k];
        const i64 m = pos_part(checked_neg(a));
        for (int j = 0; j < n; ++j) {
            if (j == k) {
                out[i * n + j] = checked_neg(a);
            } else {
                const i64 bkj = B[k * n + j];
                i64 t = checked_add(C[i * n + j], checked_mul(a, pos_part(bkj)));
                out[i * n + j] = checked_add(t, checked_mul(m, bkj));
            }
        }
    }
}

void mutate_d_scalar(const i64* D, const i64* B, i64* out, int n, int k) {
    for (int i = 0; i < n; ++i) {
        i64 s_pos = 0, s_neg = 0;
        for (int l = 0; l < n; ++l) {
            const i64 blk = B[l * n + k];
            const i64 d = D[i * n + l];
            if (blk > 0) s_pos = checked_add(s_pos, checked_mul(d, blk));
            if (blk < 0) s_neg = checked_add(s_neg, checked_mul(d, checked_neg(blk)));
        }
        for (int j = 0; j < n; ++j)
            out[i * n + j] = (j == k)
                ? checked_add(checked_neg(D[i * n + k]), std::max(s_pos, s_neg))
                : D[i * n + j];
    }
}

}  // namespace

const Table& scalar() {
    static const Table t{"scalar", mutate_b_scalar, mutate_c_scalar, mutate_d_scalar};
    return t;
}

const Table& select(i64 input_max_abs) {
    if (input_max_abs <= kSimdGuard) {
        if (const Table* t = avx2()) return *t;
    }
    return scalar();
}

std::vector<const Table*> available() {
    std::vector<const Table*> v{&scalar()};
    if (const Table* t = avx2()) v.push_back(t);
    return v;
}

}  // namespace cdv::kernels
