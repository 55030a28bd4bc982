#pragma once

#include <string>

#include "braidosc/coeff_io.hpp"
#include "braidosc/ratfunc.hpp"

namespace braidosc {

// The engine is generic over the coefficient field K: RatFunc in symbolic
// mode, Rat in numeric mode. Zero/one need a sample value because a RatFunc
// carries its indeterminate table.

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

inline Rat zero_like(const Rat&) { return Rat(0); }
inline RatFunc zero_like(const RatFunc& sample) { return RatFunc::from_int(sample.table(), 0); }

inline Rat one_like(const Rat&) { return Rat(1); }
inline RatFunc one_like(const RatFunc& sample) { return RatFunc::from_int(sample.table(), 1); }

inline Rat int_like(const Rat&, long v) { return Rat(v); }
inline RatFunc int_like(const RatFunc& sample, long v) {
    return RatFunc::from_int(sample.table(), Int(v));
}

inline Rat field_pow(const Rat& x, int e) { return rat_pow(x, e); }
inline RatFunc field_pow(const RatFunc& x, int e) { return x.pow(e); }

inline std::string scalar_str(const Rat& x) { return rat_str(x); }
inline std::string scalar_str(const RatFunc& x) { return print_coeff(x); }

}  // namespace braidosc
