#pragma once

#include <string>

namespace ar2 {

// Widest real type the toolchain offers. Binary128 where the compiler
// provides it in software, otherwise the platform long double.
#if defined(__SIZEOF_FLOAT128__) && !defined(AR2_NO_FLOAT128)
using wide_real = __float128;
inline constexpr int wide_real_digits = 113;
#else
using wide_real = long double;
inline constexpr int wide_real_digits = __LDBL_MANT_DIG__;
#endif

// Widest exact integer types.
__extension__ using exact_int = __int128;
__extension__ using exact_uint = unsigned __int128;

[[nodiscard]] std::string to_string(exact_int value);
[[nodiscard]] std::string to_string(exact_uint value);

}  // namespace ar2
