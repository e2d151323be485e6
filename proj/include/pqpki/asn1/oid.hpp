/**
 * ASN.1 OBJECT IDENTIFIER with base-128 content encoding.
 */

#ifndef PQPKI_ASN1_OID_HPP
#define PQPKI_ASN1_OID_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pqpki/bytes.hpp"

namespace pqpki::asn1 {

class Oid {
public:
    Oid() = default;
    Oid(std::initializer_list<uint64_t> arcs);           // throws InvalidOid
    explicit Oid(std::vector<uint64_t> arcs);            // throws InvalidOid
    static Oid parse(std::string_view dotted);           // "2.5.29.35"

    const std::vector<uint64_t>& arcs() const { return arcs_; }
    std::string to_string() const;

    // Content octets only (no tag/length): 40*arc1+arc2 then base-128 arcs.
    Bytes encode_content() const;
    static Oid decode_content(ByteView content);         // throws InvalidOid

    auto operator<=>(const Oid&) const = default;

private:
    void validate() const;
    std::vector<uint64_t> arcs_;
};

}  // namespace pqpki::asn1

#endif
