#pragma once

#include <array>
#include <string>

namespace fc {

// Saturating face-count values. kAbove means "greater than the cap in force";
// kInf means no qualifying cover exists at all (only fcn_0 can be infinite).
constexpr int kAbove = 100000000;
constexpr int kInf = 1000000000;

inline int sat_add(int a, int b) {
    if (a >= kInf || b >= kInf) return kInf;
    if (a >= kAbove || b >= kAbove) return kAbove;
    return a + b;
}

// Three-way equality under saturation at k: exact match at most k, or both
// strictly above k.
inline bool sat_eq(int a, int b, int k) {
    if (a <= k || b <= k) return a == b;
    return true;
}

inline std::string sat_str(int v) {
    if (v >= kInf) return "inf";
    if (v >= kAbove) return ">k";
    return std::to_string(v);
}

// The fcn_0/fcn_1/fcn_2 triple of an enhancement, with fcn_0 refined by which
// corners the internal-only cover must reach. f0[mask] covers the non-corner
// terminals plus corner c1 when bit 0 is set and c2 when bit 1 is set.
// fcn_1/fcn_2 need no corner variants: external faces contain both corners.
struct FcnProfile {
    std::array<int, 4> f0{kInf, kInf, kInf, kInf};
    int f1 = kInf;
    int f2 = kInf;

    // Spec-shaped accessor: fcn_0(T \ C) where C is the set of corners removed
    // from the terminal set. Corner marks of the enhancement are passed in.
    int f0_minus(bool c1_terminal, bool c2_terminal, int removed_mask) const {
        int mask = 0;
        if (c1_terminal && !(removed_mask & 1)) mask |= 1;
        if (c2_terminal && !(removed_mask & 2)) mask |= 2;
        return f0[mask];
    }

    bool operator==(const FcnProfile &o) const = default;

    std::string to_string() const {
        return "f0=" + sat_str(f0[0]) + "/" + sat_str(f0[1]) + "/" + sat_str(f0[2]) +
               "/" + sat_str(f0[3]) + " f1=" + sat_str(f1) + " f2=" + sat_str(f2);
    }
};

inline bool profiles_equal_at(const FcnProfile &a, const FcnProfile &b, int k) {
    for (int m = 0; m < 4; ++m)
        if (!sat_eq(a.f0[m], b.f0[m], k)) return false;
    return sat_eq(a.f1, b.f1, k) && sat_eq(a.f2, b.f2, k);
}

}  // namespace fc
