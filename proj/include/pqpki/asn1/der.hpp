/**
 * DER encoder/decoder for the X.509 / CRL / OCSP subset of ASN.1.
 *
 * Values form an immutable tag-length-value tree: a primitive node owns raw
 * content octets, a constructed node owns an ordered child list. Encoding is
 * definite-length with minimal length octets; decoding is strict DER and
 * rejects BER variants (indefinite length, non-minimal length octets).
 *
 * Supported universal tags: BOOLEAN, INTEGER, BIT STRING, OCTET STRING,
 * NULL, OBJECT IDENTIFIER, ENUMERATED, UTF8String, PrintableString,
 * UTCTime, GeneralizedTime, SEQUENCE, SET, plus context-specific tagging.
 * High-tag-number forms (number > 30) are rejected.
 */

#ifndef PQPKI_ASN1_DER_HPP
#define PQPKI_ASN1_DER_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pqpki/asn1/error.hpp"
#include "pqpki/asn1/oid.hpp"
#include "pqpki/asn1/time.hpp"
#include "pqpki/bytes.hpp"

namespace pqpki::asn1 {

enum class TagClass : uint8_t { Universal = 0, ContextSpecific = 2 };

namespace tag {
constexpr uint32_t Boolean = 1;
constexpr uint32_t Integer = 2;
constexpr uint32_t BitString = 3;
constexpr uint32_t OctetString = 4;
constexpr uint32_t Null = 5;
constexpr uint32_t ObjectId = 6;
constexpr uint32_t Enumerated = 10;
constexpr uint32_t Utf8String = 12;
constexpr uint32_t Sequence = 16;
constexpr uint32_t Set = 17;
constexpr uint32_t PrintableString = 19;
constexpr uint32_t UtcTime = 23;
constexpr uint32_t GeneralizedTime = 24;
}  // namespace tag

struct DerTag {
    TagClass cls = TagClass::Universal;
    bool constructed = false;
    uint32_t number = 0;  // <= 30

    auto operator<=>(const DerTag&) const = default;
};

class DerValue {
public:
    DerValue() : tag_{TagClass::Universal, false, tag::Null} {}

    static DerValue primitive(DerTag tag, Bytes content);
    static DerValue constructed(DerTag tag, std::vector<DerValue> children);

    // ---- universal-type constructors -------------------------------------
    static DerValue boolean(bool v);
    static DerValue integer(int64_t v);
    static DerValue integer_content(Bytes twos_complement);   // pre-validated content
    static DerValue unsigned_integer(ByteView magnitude);     // big-endian, >= 0
    static DerValue bit_string(ByteView payload);             // 0 unused bits
    static DerValue octet_string(ByteView content);
    static DerValue null();
    static DerValue object_identifier(const Oid& oid);
    static DerValue enumerated(int64_t v);
    static DerValue utf8_string(std::string_view s);
    static DerValue printable_string(std::string_view s);
    static DerValue time(const TimeValue& t);
    static DerValue sequence(std::vector<DerValue> children);
    static DerValue set(std::vector<DerValue> children);
    // [n] EXPLICIT wrapper (constructed) and [n] IMPLICIT primitive
    static DerValue context(uint32_t number, std::vector<DerValue> children);
    static DerValue context_primitive(uint32_t number, Bytes content);

    // ---- inspection ------------------------------------------------------
    const DerTag& tag() const { return tag_; }
    bool is_constructed() const { return tag_.constructed; }
    bool is_universal(uint32_t number) const {
        return tag_.cls == TagClass::Universal && tag_.number == number;
    }
    bool is_context(uint32_t number) const {
        return tag_.cls == TagClass::ContextSpecific && tag_.number == number;
    }

    const Bytes& content() const;                  // primitive nodes only
    const std::vector<DerValue>& children() const; // constructed nodes only
    size_t child_count() const { return children().size(); }
    const DerValue& child(size_t i) const;

    // ---- strict typed readers (throw TypeMismatch / format errors) ------
    bool read_boolean() const;
    int64_t read_small_integer() const;        // fits in int64
    Bytes read_integer_content() const;        // raw two's-complement octets
    Bytes read_unsigned_integer() const;       // magnitude, rejects negatives
    Bytes read_bit_string_payload() const;     // strips the unused-bits octet
    const Bytes& read_octet_string() const;
    Oid read_oid() const;
    std::string read_string() const;           // UTF8String or PrintableString
    TimeValue read_time() const;
    int64_t read_enumerated() const;

    bool operator==(const DerValue& other) const;

private:
    DerValue(DerTag tag, Bytes content) : tag_(tag), body_(std::move(content)) {}
    DerValue(DerTag tag, std::vector<DerValue> children)
        : tag_(tag), body_(std::move(children)) {}

    DerTag tag_;
    std::variant<Bytes, std::vector<DerValue>> body_;
};

// Unique DER encoding of the tree (definite length, minimal length octets).
Bytes encode(const DerValue& value);

// Parses exactly the whole input; trailing bytes are an error.
DerValue decode(ByteView input);

// Encodes content octets of an INTEGER holding an unsigned big-endian value.
Bytes integer_content_from_unsigned(ByteView magnitude);

}  // namespace pqpki::asn1

#endif
