#ifndef CHORAL_FOUR_VALUE_HPP
#define CHORAL_FOUR_VALUE_HPP

#include <string>

namespace choral {

/// The four-valued bilattice: F/T are classical, U is undecided, C is
/// contradictory. Truth order F ≤ U,C ≤ T (U, C incomparable);
/// information order U ≤ T,F ≤ C (T, F incomparable).
enum class FourValue { F, U, C, T };

inline bool leq_t(FourValue a, FourValue b) {
    if (a == b) return true;
    if (a == FourValue::F) return true;
    if (b == FourValue::T) return true;
    return false;
}

inline bool leq_i(FourValue a, FourValue b) {
    if (a == b) return true;
    if (a == FourValue::U) return true;
    if (b == FourValue::C) return true;
    return false;
}

inline FourValue meet_t(FourValue a, FourValue b) {
    if (leq_t(a, b)) return a;
    if (leq_t(b, a)) return b;
    return FourValue::F;  // meet of the incomparable U and C
}

inline FourValue join_t(FourValue a, FourValue b) {
    if (leq_t(a, b)) return b;
    if (leq_t(b, a)) return a;
    return FourValue::T;
}

/// The involution: swaps T and F, fixes U and C.
inline FourValue negate4(FourValue v) {
    switch (v) {
        case FourValue::T: return FourValue::F;
        case FourValue::F: return FourValue::T;
        default: return v;
    }
}

inline const char* to_string(FourValue v) {
    switch (v) {
        case FourValue::T: return "T";
        case FourValue::F: return "F";
        case FourValue::U: return "U";
        case FourValue::C: return "C";
    }
    return "?";
}

} // namespace choral

#endif
