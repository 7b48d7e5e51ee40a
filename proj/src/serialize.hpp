#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "variety.hpp"

namespace mmset::ser {

// Variety container format (little-endian):
//   magic "MMSETB01", u32 schema version,
//   u8 p, u8 k, u8 d, u8 flags (bit 0: line table present),
//   u16 ncols, u32 N,
//   u8 family length + bytes, u8 param count + i32 params,
//   u8 modulus length + bytes,
//   u64 point count, u64 line count, u64 symp count,
//   points as ncols coordinate bytes each,
//   lines as two u32 point indices each (the two least on the line),
//   symps as (d+2) x ncols basis bytes each (canonical RREF rows).
// Loading rebuilds membership, line point sets, and fitted symp forms.

inline constexpr char kMagic[8] = {'M', 'M', 'S', 'E', 'T', 'B', '0', '1'};
inline constexpr uint32_t kSchemaVersion = 1;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void save(const var::MMSet& set, std::ostream& os);
void save_file(const var::MMSet& set, const std::string& path);

var::MMSet load(std::istream& is);
var::MMSet load_file(const std::string& path);

}  // namespace mmset::ser
