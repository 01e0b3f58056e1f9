#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace iotviz {

// 64-bit FNV-1a. Change detection and version stamps only; not a security
// boundary.
class Fnv1a64 {
public:
    constexpr Fnv1a64& update(std::string_view bytes) {
        for (const char c : bytes) {
            h_ ^= static_cast<unsigned char>(c);
            h_ *= 0x100000001B3ull;
        }
        return *this;
    }
    constexpr Fnv1a64& update_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (v >> (8 * i)) & 0xFFu;
            h_ *= 0x100000001B3ull;
        }
        return *this;
    }
    constexpr std::uint64_t digest() const { return h_; }

private:
    std::uint64_t h_ = 0xCBF29CE484222325ull;
};

inline std::string to_hex(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

inline std::string content_hash(std::string_view bytes) { return to_hex(Fnv1a64{}.update(bytes).digest()); }

}  // namespace iotviz
