#include "pqpki/asn1/der.hpp"

#include <algorithm>

namespace pqpki::asn1 {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnsupportedTag: return "UnsupportedTag";
        case ErrorCode::TruncatedInput: return "TruncatedInput";
        case ErrorCode::TrailingBytes: return "TrailingBytes";
        case ErrorCode::IndefiniteLength: return "IndefiniteLength";
        case ErrorCode::NonMinimalLength: return "NonMinimalLength";
        case ErrorCode::InvalidOid: return "InvalidOid";
        case ErrorCode::InvalidInteger: return "InvalidInteger";
        case ErrorCode::InvalidBoolean: return "InvalidBoolean";
        case ErrorCode::InvalidString: return "InvalidString";
        case ErrorCode::UnrepresentableTime: return "UnrepresentableTime";
        case ErrorCode::InvalidTime: return "InvalidTime";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
    }
    return "Asn1Error";
}

namespace {

void check_tag_number(uint32_t number) {
    if (number > 30) {
        throw Asn1Error(ErrorCode::UnsupportedTag,
                        "high-tag-number form (number " + std::to_string(number) + ")");
    }
}

DerTag universal(uint32_t number, bool constructed = false) {
    return DerTag{TagClass::Universal, constructed, number};
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

DerValue DerValue::primitive(DerTag tag, Bytes content) {
    check_tag_number(tag.number);
    tag.constructed = false;
    return DerValue(tag, std::move(content));
}

DerValue DerValue::constructed(DerTag tag, std::vector<DerValue> children) {
    check_tag_number(tag.number);
    tag.constructed = true;
    return DerValue(tag, std::move(children));
}

DerValue DerValue::boolean(bool v) {
    return primitive(universal(tag::Boolean), Bytes{uint8_t(v ? 0xFF : 0x00)});
}

DerValue DerValue::integer(int64_t v) {
    // minimal two's-complement big-endian
    Bytes content;
    uint64_t u = static_cast<uint64_t>(v);
    for (int i = 7; i >= 0; --i) content.push_back(uint8_t(u >> (8 * i)));
    size_t skip = 0;
    while (skip + 1 < content.size() &&
           ((content[skip] == 0x00 && !(content[skip + 1] & 0x80)) ||
            (content[skip] == 0xFF && (content[skip + 1] & 0x80)))) {
        ++skip;
    }
    content.erase(content.begin(), content.begin() + skip);
    return primitive(universal(tag::Integer), std::move(content));
}

DerValue DerValue::integer_content(Bytes twos_complement) {
    if (twos_complement.empty()) {
        throw Asn1Error(ErrorCode::InvalidInteger, "empty INTEGER content");
    }
    return primitive(universal(tag::Integer), std::move(twos_complement));
}

Bytes integer_content_from_unsigned(ByteView magnitude) {
    Bytes content;
    size_t skip = 0;
    while (skip < magnitude.size() && magnitude[skip] == 0x00) ++skip;
    if (skip == magnitude.size()) return Bytes{0x00};
    if (magnitude[skip] & 0x80) content.push_back(0x00);
    content.insert(content.end(), magnitude.begin() + skip, magnitude.end());
    return content;
}

DerValue DerValue::unsigned_integer(ByteView magnitude) {
    return integer_content(integer_content_from_unsigned(magnitude));
}

DerValue DerValue::bit_string(ByteView payload) {
    Bytes content;
    content.reserve(payload.size() + 1);
    content.push_back(0x00);  // whole bytes only: 0 unused bits
    append(content, payload);
    return primitive(universal(tag::BitString), std::move(content));
}

DerValue DerValue::octet_string(ByteView content) {
    return primitive(universal(tag::OctetString), to_bytes(content));
}

DerValue DerValue::null() { return primitive(universal(tag::Null), {}); }

DerValue DerValue::object_identifier(const Oid& oid) {
    return primitive(universal(tag::ObjectId), oid.encode_content());
}

DerValue DerValue::enumerated(int64_t v) {
    DerValue as_int = integer(v);
    return primitive(universal(tag::Enumerated), as_int.content());
}

DerValue DerValue::utf8_string(std::string_view s) {
    return primitive(universal(tag::Utf8String), to_bytes(s));
}

DerValue DerValue::printable_string(std::string_view s) {
    static constexpr std::string_view extra = " '()+,-./:=?";
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || extra.find(c) != std::string_view::npos;
        if (!ok) {
            throw Asn1Error(ErrorCode::InvalidString,
                            "character not allowed in PrintableString");
        }
    }
    return primitive(universal(tag::PrintableString), to_bytes(s));
}

DerValue DerValue::time(const TimeValue& t) {
    uint32_t n = t.encoding == TimeEncoding::UtcTime ? tag::UtcTime : tag::GeneralizedTime;
    return primitive(universal(n), to_bytes(std::string_view(t.format())));
}

DerValue DerValue::sequence(std::vector<DerValue> children) {
    return constructed(universal(tag::Sequence, true), std::move(children));
}

DerValue DerValue::set(std::vector<DerValue> children) {
    return constructed(universal(tag::Set, true), std::move(children));
}

DerValue DerValue::context(uint32_t number, std::vector<DerValue> children) {
    return constructed(DerTag{TagClass::ContextSpecific, true, number}, std::move(children));
}

DerValue DerValue::context_primitive(uint32_t number, Bytes content) {
    return primitive(DerTag{TagClass::ContextSpecific, false, number}, std::move(content));
}

// ---------------------------------------------------------------------------
// inspection

const Bytes& DerValue::content() const {
    if (tag_.constructed) {
        throw Asn1Error(ErrorCode::TypeMismatch, "constructed value has no raw content");
    }
    return std::get<Bytes>(body_);
}

const std::vector<DerValue>& DerValue::children() const {
    if (!tag_.constructed) {
        throw Asn1Error(ErrorCode::TypeMismatch, "primitive value has no children");
    }
    return std::get<std::vector<DerValue>>(body_);
}

const DerValue& DerValue::child(size_t i) const {
    const auto& kids = children();
    if (i >= kids.size()) {
        throw Asn1Error(ErrorCode::TypeMismatch,
                        "child index " + std::to_string(i) + " out of range");
    }
    return kids[i];
}

bool DerValue::operator==(const DerValue& other) const {
    return tag_ == other.tag_ && body_ == other.body_;
}

// ---------------------------------------------------------------------------
// typed readers

namespace {

void expect(const DerValue& v, uint32_t number, bool constructed, const char* what) {
    if (v.tag().cls != TagClass::Universal || v.tag().number != number ||
        v.tag().constructed != constructed) {
        throw Asn1Error(ErrorCode::TypeMismatch, std::string("expected ") + what);
    }
}

void check_minimal_integer(const Bytes& c) {
    if (c.empty()) throw Asn1Error(ErrorCode::InvalidInteger, "empty INTEGER");
    if (c.size() >= 2 && ((c[0] == 0x00 && !(c[1] & 0x80)) ||
                          (c[0] == 0xFF && (c[1] & 0x80)))) {
        throw Asn1Error(ErrorCode::InvalidInteger, "non-minimal INTEGER encoding");
    }
}

}  // namespace

bool DerValue::read_boolean() const {
    expect(*this, tag::Boolean, false, "BOOLEAN");
    const Bytes& c = content();
    if (c.size() != 1 || (c[0] != 0x00 && c[0] != 0xFF)) {
        throw Asn1Error(ErrorCode::InvalidBoolean, "BOOLEAN must be one octet 00 or FF");
    }
    return c[0] == 0xFF;
}

Bytes DerValue::read_integer_content() const {
    expect(*this, tag::Integer, false, "INTEGER");
    check_minimal_integer(content());
    return content();
}

int64_t DerValue::read_small_integer() const {
    Bytes c = read_integer_content();
    if (c.size() > 8) {
        throw Asn1Error(ErrorCode::InvalidInteger, "INTEGER too large for int64");
    }
    int64_t v = (c[0] & 0x80) ? -1 : 0;
    for (uint8_t b : c) v = (v << 8) | b;
    return v;
}

Bytes DerValue::read_unsigned_integer() const {
    Bytes c = read_integer_content();
    if (c[0] & 0x80) {
        throw Asn1Error(ErrorCode::InvalidInteger, "negative INTEGER where unsigned expected");
    }
    if (c.size() > 1 && c[0] == 0x00) c.erase(c.begin());
    return c;
}

Bytes DerValue::read_bit_string_payload() const {
    expect(*this, tag::BitString, false, "BIT STRING");
    const Bytes& c = content();
    if (c.empty() || c[0] > 7) {
        throw Asn1Error(ErrorCode::TypeMismatch, "malformed BIT STRING unused-bits octet");
    }
    // nonzero unused-bit counts are accepted when parsing foreign data;
    // everything this toolkit emits uses whole bytes
    return Bytes(c.begin() + 1, c.end());
}

const Bytes& DerValue::read_octet_string() const {
    expect(*this, tag::OctetString, false, "OCTET STRING");
    return content();
}

Oid DerValue::read_oid() const {
    expect(*this, tag::ObjectId, false, "OBJECT IDENTIFIER");
    return Oid::decode_content(content());
}

std::string DerValue::read_string() const {
    if (tag_.cls != TagClass::Universal || tag_.constructed ||
        (tag_.number != tag::Utf8String && tag_.number != tag::PrintableString)) {
        throw Asn1Error(ErrorCode::TypeMismatch, "expected UTF8String or PrintableString");
    }
    return std::string(content().begin(), content().end());
}

TimeValue DerValue::read_time() const {
    if (tag_.cls != TagClass::Universal || tag_.constructed ||
        (tag_.number != tag::UtcTime && tag_.number != tag::GeneralizedTime)) {
        throw Asn1Error(ErrorCode::TypeMismatch, "expected UTCTime or GeneralizedTime");
    }
    TimeEncoding enc = tag_.number == tag::UtcTime ? TimeEncoding::UtcTime
                                                   : TimeEncoding::GeneralizedTime;
    return TimeValue::parse(std::string(content().begin(), content().end()), enc);
}

int64_t DerValue::read_enumerated() const {
    expect(*this, tag::Enumerated, false, "ENUMERATED");
    check_minimal_integer(content());
    const Bytes& c = content();
    if (c.size() > 8) {
        throw Asn1Error(ErrorCode::InvalidInteger, "ENUMERATED too large");
    }
    int64_t v = (c[0] & 0x80) ? -1 : 0;
    for (uint8_t b : c) v = (v << 8) | b;
    return v;
}

// ---------------------------------------------------------------------------
// encoding

namespace {

void encode_length(Bytes& out, size_t len) {
    if (len < 128) {
        out.push_back(uint8_t(len));
        return;
    }
    Bytes octets;
    while (len > 0) {
        octets.push_back(uint8_t(len & 0xFF));
        len >>= 8;
    }
    out.push_back(uint8_t(0x80 | octets.size()));
    out.insert(out.end(), octets.rbegin(), octets.rend());
}

void encode_into(const DerValue& value, Bytes& out) {
    const DerTag& tag = value.tag();
    check_tag_number(tag.number);
    uint8_t id = uint8_t((uint8_t(tag.cls) << 6) | (tag.constructed ? 0x20 : 0x00) |
                         uint8_t(tag.number));
    out.push_back(id);
    if (!tag.constructed) {
        encode_length(out, value.content().size());
        append(out, value.content());
    } else {
        Bytes body;
        for (const DerValue& child : value.children()) encode_into(child, body);
        encode_length(out, body.size());
        append(out, body);
    }
}

}  // namespace

Bytes encode(const DerValue& value) {
    Bytes out;
    encode_into(value, out);
    return out;
}

// ---------------------------------------------------------------------------
// decoding

namespace {

struct Cursor {
    ByteView data;
    size_t pos = 0;

    size_t remaining() const { return data.size() - pos; }
    uint8_t take() {
        if (pos >= data.size()) {
            throw Asn1Error(ErrorCode::TruncatedInput, "unexpected end of input", pos);
        }
        return data[pos++];
    }
};

size_t decode_length(Cursor& in) {
    size_t at = in.pos;
    uint8_t first = in.take();
    if (first < 0x80) return first;
    if (first == 0x80) {
        throw Asn1Error(ErrorCode::IndefiniteLength, "indefinite length is not DER", at);
    }
    size_t count = first & 0x7F;
    if (count > sizeof(size_t)) {
        throw Asn1Error(ErrorCode::TruncatedInput, "length field too large", at);
    }
    size_t len = 0;
    for (size_t i = 0; i < count; ++i) {
        uint8_t b = in.take();
        if (i == 0 && b == 0x00) {
            throw Asn1Error(ErrorCode::NonMinimalLength, "leading zero length octet", at);
        }
        len = (len << 8) | b;
    }
    if (len < 128) {
        throw Asn1Error(ErrorCode::NonMinimalLength, "long form where short form fits", at);
    }
    return len;
}

DerValue decode_value(Cursor& in, int depth) {
    if (depth > 64) {
        throw Asn1Error(ErrorCode::TruncatedInput, "nesting too deep", in.pos);
    }
    size_t at = in.pos;
    uint8_t id = in.take();
    uint8_t cls_bits = id >> 6;
    bool constructed = (id & 0x20) != 0;
    uint32_t number = id & 0x1F;
    if (number == 0x1F) {
        throw Asn1Error(ErrorCode::UnsupportedTag, "high-tag-number form", at);
    }
    if (cls_bits != 0 && cls_bits != 2) {
        throw Asn1Error(ErrorCode::UnsupportedTag,
                        "application/private tag class", at);
    }
    DerTag tag{cls_bits == 0 ? TagClass::Universal : TagClass::ContextSpecific,
               constructed, number};

    size_t len = decode_length(in);
    if (len > in.remaining()) {
        throw Asn1Error(ErrorCode::TruncatedInput,
                        "content length exceeds input", in.pos);
    }

    if (!constructed) {
        Bytes content(in.data.begin() + in.pos, in.data.begin() + in.pos + len);
        in.pos += len;
        return DerValue::primitive(tag, std::move(content));
    }

    size_t end = in.pos + len;
    std::vector<DerValue> children;
    while (in.pos < end) {
        children.push_back(decode_value(in, depth + 1));
        if (in.pos > end) {
            throw Asn1Error(ErrorCode::TruncatedInput, "child overruns parent", in.pos);
        }
    }
    return DerValue::constructed(tag, std::move(children));
}

}  // namespace

DerValue decode(ByteView input) {
    if (input.empty()) {
        throw Asn1Error(ErrorCode::TruncatedInput, "empty input");
    }
    Cursor in{input};
    DerValue v = decode_value(in, 0);
    if (in.pos != input.size()) {
        throw Asn1Error(ErrorCode::TrailingBytes,
                        std::to_string(input.size() - in.pos) + " bytes after value", in.pos);
    }
    return v;
}

}  // namespace pqpki::asn1
