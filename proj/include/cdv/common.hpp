#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdv {

using i64 = std::int64_t;

// Exact integer arithmetic everywhere; wrap-around is a bug, so checked ops
// throw instead of wrapping.
struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

struct NotSkewSymmetrizable : std::runtime_error {
    explicit NotSkewSymmetrizable(const std::string& why)
        : std::runtime_error("matrix is not skew-symmetrizable: " + why) {}
};

struct NotSymmetrizable : std::runtime_error {
    explicit NotSymmetrizable(const std::string& why)
        : std::runtime_error("matrix is not symmetrizable: " + why) {}
};

struct IncompleteAtlas : std::runtime_error {
    IncompleteAtlas() : std::runtime_error("seed atlas did not reach closure (cap exceeded)") {}
};

struct NotAdmissible : std::runtime_error {
    explicit NotAdmissible(const std::string& why)
        : std::runtime_error("automorphism is not admissible: " + why) {}
};

struct RepresentativeDependent : std::runtime_error {
    RepresentativeDependent()
        : std::runtime_error("folded entry depends on the orbit representative (caller bug)") {}
};

struct SignConditionViolated : std::runtime_error {
    explicit SignConditionViolated(const std::string& why)
        : std::runtime_error("folding sign condition violated: " + why) {}
};

struct NotSignCoherent : std::runtime_error {
    NotSignCoherent() : std::runtime_error("vector is not sign-coherent") {}
};

struct NotSkewSymmetric : std::runtime_error {
    NotSkewSymmetric() : std::runtime_error("matrix is not skew-symmetric") {}
};

struct DisconnectedSupport : std::runtime_error {
    DisconnectedSupport() : std::runtime_error("vector support is disconnected") {}
};

struct NotFoldedType : std::runtime_error {
    explicit NotFoldedType(const std::string& why)
        : std::runtime_error("matrix is not of a folded cluster type: " + why) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 pos_part(i64 a) { return a > 0 ? a : 0; }

inline int sign_of(i64 a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

using IntVec = std::vector<i64>;

}  // namespace cdv
