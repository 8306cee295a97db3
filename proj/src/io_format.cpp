#include "tauber/io_format.hpp"

#include <charconv>
#include <system_error>

#include "tauber/errors.hpp"

namespace tauber {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw io_error("malformed floating-point value: '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw io_error("malformed integer value: '" + std::string(text) + "'");
    return v;
}

}  // namespace tauber
