#include "chromind/gf64.hpp"

#include <cstdio>

namespace chromind {

std::string GF64::to_hex() const {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v_));
    return std::string(buf);
}

GF64 GF64::from_hex(const std::string& s) {
    if (s.empty() || s.size() > 16) throw std::invalid_argument("GF64: bad hex literal");
    uint64_t v = 0;
    for (char ch : s) {
        uint64_t d;
        if (ch >= '0' && ch <= '9') d = static_cast<uint64_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f') d = static_cast<uint64_t>(ch - 'a') + 10;
        else if (ch >= 'A' && ch <= 'F') d = static_cast<uint64_t>(ch - 'A') + 10;
        else throw std::invalid_argument("GF64: bad hex digit");
        v = (v << 4) | d;
    }
    return GF64(v);
}

}  // namespace chromind
