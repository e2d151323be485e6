/**
 * Shared byte-buffer aliases and small helpers used across the toolkit.
 */

#ifndef PQPKI_BYTES_HPP
#define PQPKI_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqpki {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(ByteView v) { return Bytes(v.begin(), v.end()); }

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline ByteView as_view(const Bytes& b) { return ByteView(b.data(), b.size()); }

inline ByteView as_view(std::string_view s) {
    return ByteView(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

inline void append(Bytes& out, ByteView more) {
    out.insert(out.end(), more.begin(), more.end());
}

inline void append(Bytes& out, std::string_view more) { append(out, as_view(more)); }

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument on bad input

// Constant-time equality for signature comparisons.
bool equal_ct(ByteView a, ByteView b);

}  // namespace pqpki

#endif
