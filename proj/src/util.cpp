#include <cstdio>

#include "geomhop/common.hpp"

namespace geomhop {

uint64_t fnv1a64(const void* data, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < len; i++) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string checksum_hex(const std::string& s) {
    char buf[20];
    snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)fnv1a64(s));
    return buf;
}

}  // namespace geomhop
