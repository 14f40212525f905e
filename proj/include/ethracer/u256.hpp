#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ethracer {

// 256-bit unsigned word with wraparound arithmetic (mod 2^256).
// Division/modulo by zero are guarded at the interpreter level.
using u256 = boost::multiprecision::uint256_t;

// Accepts decimal ("123") or 0x-prefixed hex ("0xff"). Throws std::invalid_argument.
u256 parse_u256(const std::string& text);

std::string to_dec(const u256& v);

// Lowercase minimal hex with 0x prefix, e.g. 0x0, 0x1f.
std::string to_hex(const u256& v);

// FNV-1a 64-bit, used for stable output and source hashing.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace ethracer
