#pragma once

namespace toda {

// Package version.
inline constexpr const char* kVersion = "0.1.0";

// Version of the coefficient formulas.  Any change to the recursions that
// define P, T or N invalidates persisted caches, so this string is embedded
// in the cache file header and checked on load.
inline constexpr const char* kFormulaVersion = "1";

}  // namespace toda
