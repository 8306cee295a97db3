#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tauber {

// Shortest decimal form that round-trips to the same double. All file
// formats use this so repeated runs are byte-identical and values survive
// a write/read cycle exactly.
std::string format_double(double v);

// Strict parse; throws io_error on trailing junk or malformed input.
double parse_double(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

}  // namespace tauber
