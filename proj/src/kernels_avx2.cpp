// AVX2 variants of the mutation kernels.  This translation unit is compiled
// with -mavx2 (see CMakeLists); callers reach it only through the runtime
// dispatch in kernels.cpp, so the binary still runs on non-AVX2 machines.
//
// Arithmetic here is unchecked: the dispatcher admits inputs only below
// kSimdGuard, where no 64-bit intermediate can overflow.
#include "cdv/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace cdv::kernels {
namespace {

inline __m256i mul64(__m256i a, __m256i b) {
    // low 64 bits of a*b via 32x32 partial products
    __m256i lo = _mm256_mul_epu32(a, b);
    __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)),
                                     _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i max64(__m256i a, __m256i b) {
    return _mm256_blendv_epi8(b, a, _mm256_cmpgt_epi64(a, b));
}

inline __m256i pos64(__m256i a) { return max64(a, _mm256_setzero_si256()); }

// out_row[j] = row[j] + a*[bk[j]]_+ + [-a]_+ * bk[j]   vectorized over j
inline void fma_row(const i64* row, const i64* bk, i64 a, i64* out, int n) {
    const i64 m = a < 0 ? -a : 0;
    const __m256i va = _mm256_set1_epi64x(a);
    const __m256i vm = _mm256_set1_epi64x(m);
    int j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bk + j));
        __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
        __m256i acc = _mm256_add_epi64(r, mul64(va, pos64(b)));
        acc = _mm256_add_epi64(acc, mul64(vm, b));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc);
    }
    for (; j < n; ++j) out[j] = row[j] + a * (bk[j] > 0 ? bk[j] : 0) + m * bk[j];
}

void mutate_b_avx2(const i64* B, i64* out, int n, int k) {
    const i64* bk = B + static_cast<size_t>(k) * n;
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            for (int j = 0; j < n; ++j) out[i * n + j] = -B[i * n + j];
            continue;
        }
        fma_row(B + static_cast<size_t>(i) * n, bk, B[i * n + k], out + static_cast<size_t>(i) * n, n);
        out[i * n + k] = -B[i * n + k];
    }
}

void mutate_c_avx2(const i64* C, const i64* B, i64* out, int n, int k) {
    const i64* bk = B + static_cast<size_t>(k) * n;
    for (int i = 0; i < n; ++i) {
        fma_row(C + static_cast<size_t>(i) * n, bk, C[i * n + k], out + static_cast<size_t>(i) * n, n);
        out[i * n + k] = -C[i * n + k];
    }
}

void mutate_d_avx2(const i64* D, const i64* B, i64* out, int n, int k) {
    i64 bpos[kMaxRank], bneg[kMaxRank];
    for (int l = 0; l < n; ++l) {
        const i64 blk = B[l * n + k];
        bpos[l] = blk > 0 ? blk : 0;
        bneg[l] = blk < 0 ? -blk : 0;
    }
    for (int i = 0; i < n; ++i) {
        const i64* row = D + static_cast<size_t>(i) * n;
        __m256i accp = _mm256_setzero_si256(), accn = _mm256_setzero_si256();
        int l = 0;
        for (; l + 4 <= n; l += 4) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + l));
            accp = _mm256_add_epi64(accp, mul64(d, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bpos + l))));
            accn = _mm256_add_epi64(accn, mul64(d, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bneg + l))));
        }
        alignas(32) i64 tp[4], tn[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tp), accp);
        _mm256_store_si256(reinterpret_cast<__m256i*>(tn), accn);
        i64 s_pos = tp[0] + tp[1] + tp[2] + tp[3];
        i64 s_neg = tn[0] + tn[1] + tn[2] + tn[3];
        for (; l < n; ++l) {
            s_pos += row[l] * bpos[l];
            s_neg += row[l] * bneg[l];
        }
        for (int j = 0; j < n; ++j) out[i * n + j] = row[j];
        out[i * n + k] = -row[k] + std::max(s_pos, s_neg);
    }
}

}  // namespace

const Table* avx2() {
    static const Table t{"avx2", mutate_b_avx2, mutate_c_avx2, mutate_d_avx2};
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &t : nullptr;
}

}  // namespace cdv::kernels

#else

namespace cdv::kernels {
const Table* avx2() { return nullptr; }
}  // namespace cdv::kernels

#endif
