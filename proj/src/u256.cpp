#include "ethracer/u256.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ethracer {

u256 parse_u256(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    try {
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
            return u256(text);
        for (char c : text)
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit");
        return u256(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed integer literal: " + text);
    }
}

std::string to_dec(const u256& v) {
    return v.str();
}

std::string to_hex(const u256& v) {
    std::ostringstream os;
    os << std::hex << v;
    return "0x" + os.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ethracer
