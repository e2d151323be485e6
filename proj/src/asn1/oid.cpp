#include "pqpki/asn1/oid.hpp"

#include <charconv>

#include "pqpki/asn1/error.hpp"

namespace pqpki::asn1 {

Oid::Oid(std::initializer_list<uint64_t> arcs) : arcs_(arcs) { validate(); }

Oid::Oid(std::vector<uint64_t> arcs) : arcs_(std::move(arcs)) { validate(); }

void Oid::validate() const {
    if (arcs_.size() < 2) {
        throw Asn1Error(ErrorCode::InvalidOid, "an OID needs at least two arcs");
    }
    if (arcs_[0] > 2) {
        throw Asn1Error(ErrorCode::InvalidOid, "first arc must be 0, 1 or 2");
    }
    if (arcs_[0] < 2 && arcs_[1] >= 40) {
        throw Asn1Error(ErrorCode::InvalidOid, "second arc must be < 40 under arcs 0/1");
    }
}

Oid Oid::parse(std::string_view dotted) {
    std::vector<uint64_t> arcs;
    size_t start = 0;
    while (start <= dotted.size()) {
        size_t dot = dotted.find('.', start);
        std::string_view part = dotted.substr(start, dot == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : dot - start);
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw Asn1Error(ErrorCode::InvalidOid, "bad dotted OID \"" + std::string(dotted) + "\"");
        }
        arcs.push_back(v);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return Oid(std::move(arcs));
}

std::string Oid::to_string() const {
    std::string s;
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(arcs_[i]);
    }
    return s;
}

namespace {

void encode_base128(Bytes& out, uint64_t v) {
    uint8_t stack[10];
    size_t n = 0;
    do {
        stack[n++] = uint8_t(v & 0x7F);
        v >>= 7;
    } while (v > 0);
    while (n-- > 1) out.push_back(uint8_t(stack[n] | 0x80));
    out.push_back(stack[0]);
}

}  // namespace

Bytes Oid::encode_content() const {
    validate();
    Bytes out;
    encode_base128(out, 40 * arcs_[0] + arcs_[1]);
    for (size_t i = 2; i < arcs_.size(); ++i) encode_base128(out, arcs_[i]);
    return out;
}

Oid Oid::decode_content(ByteView content) {
    if (content.empty()) {
        throw Asn1Error(ErrorCode::InvalidOid, "empty OID content");
    }
    std::vector<uint64_t> arcs;
    size_t i = 0;
    bool first = true;
    while (i < content.size()) {
        uint64_t v = 0;
        size_t start = i;
        while (true) {
            if (i >= content.size()) {
                throw Asn1Error(ErrorCode::InvalidOid, "truncated base-128 arc");
            }
            uint8_t b = content[i++];
            if (i == start + 1 && b == 0x80) {
                throw Asn1Error(ErrorCode::InvalidOid, "non-minimal base-128 arc");
            }
            if (v > (UINT64_MAX >> 7)) {
                throw Asn1Error(ErrorCode::InvalidOid, "arc overflows 64 bits");
            }
            v = (v << 7) | (b & 0x7F);
            if (!(b & 0x80)) break;
        }
        if (first) {
            first = false;
            if (v < 40) {
                arcs.push_back(0);
                arcs.push_back(v);
            } else if (v < 80) {
                arcs.push_back(1);
                arcs.push_back(v - 40);
            } else {
                arcs.push_back(2);
                arcs.push_back(v - 80);
            }
        } else {
            arcs.push_back(v);
        }
    }
    return Oid(std::move(arcs));
}

}  // namespace pqpki::asn1
