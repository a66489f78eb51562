#pragma once
#include <vector>

#include "cdv/common.hpp"

namespace cdv::kernels {

// Inner loops of seed mutation, factored so SIMD variants can be swapped in at
// runtime.  All kernels take row-major n x n matrices.
//
//   mutate_b : B' at direction k (full matrix, sign flips included)
//   mutate_c : C' from C and the pre-mutation B (row recursion)
//   mutate_d : D' from D and the pre-mutation B (tropical column recursion)
//
// The scalar table is the reference: it checks every add/mul for overflow and
// throws.  SIMD tables compute unchecked and are only selected when all input
// entries are below kSimdGuard, which makes 64-bit overflow impossible.
struct Table {
    const char* name;
    void (*mutate_b)(const i64* B, i64* out, int n, int k);
    void (*mutate_c)(const i64* C, const i64* B, i64* out, int n, int k);
    void (*mutate_d)(const i64* D, const i64* B, i64* out, int n, int k);
};

// |entries| <= 2^20 keeps every intermediate below 2^46 for n <= 32.
inline constexpr i64 kSimdGuard = i64(1) << 20;
inline constexpr int kMaxRank = 32;

const Table& scalar();
const Table* avx2();  // nullptr when the CPU lacks AVX2 or the build does

// Scalar for big entries, best available SIMD variant under the guard.
const Table& select(i64 input_max_abs);

// Every table usable on this machine (for equivalence tests).
std::vector<const Table*> available();

}  // namespace cdv::kernels
