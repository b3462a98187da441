#ifndef WAVECL_PARAMS_HPP
#define WAVECL_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace wavecl::params {

using Id = std::uint32_t;

// Process-wide append-only symbol table for polynomial parameters.
// The symbols m, f0, kappa, sigma, sigma0, d, q are pre-registered in a
// fixed order so canonical term ordering is reproducible across runs.
Id id(const std::string& name);
std::optional<Id> lookup(const std::string& name);
std::string name(Id id);
std::size_t count();

// Pre-registered ids.
inline constexpr Id kM = 0;       // damping exponent m in a(t) = m/t
inline constexpr Id kF0 = 1;      // nonlinearity strength f0
inline constexpr Id kKappa = 2;   // logarithmic coupling
inline constexpr Id kSigma = 3;   // linear coupling in f(u) = (sigma + kappa ln|u|)u
inline constexpr Id kSigma0 = 4;  // removal-condition constant
inline constexpr Id kD = 5;       // dilation weight
inline constexpr Id kQ = 6;       // conformal factor

}  // namespace wavecl::params

#endif
