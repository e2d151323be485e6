#include "pqpki/cert/extension.hpp"

namespace pqpki::cert {

using asn1::DerValue;

Extension make_ski(ByteView subject_public_key, HashAlg hash) {
    Bytes key_id = digest(hash, subject_public_key);
    return Extension{ext_oid::subject_key_id, false,
                     asn1::encode(DerValue::octet_string(key_id))};
}

Extension make_aki(ByteView issuer_public_key, HashAlg hash) {
    return make_aki_from_key_id(digest(hash, issuer_public_key));
}

Extension make_aki_from_key_id(ByteView key_id) {
    // AuthorityKeyIdentifier ::= SEQUENCE { keyIdentifier [0] IMPLICIT OCTET STRING }
    DerValue aki = DerValue::sequence({DerValue::context_primitive(0, to_bytes(key_id))});
    return Extension{ext_oid::authority_key_id, false, asn1::encode(aki)};
}

Extension make_key_usage(KeyUsageBits bits, bool critical) {
    // KeyUsage bits: digitalSignature(0), keyCertSign(5), cRLSign(6)
    uint8_t b = 0;
    if (bits.digital_signature) b |= 0x80;
    if (bits.key_cert_sign) b |= 0x04;
    if (bits.crl_sign) b |= 0x02;
    Bytes payload{b};
    return Extension{ext_oid::key_usage, critical,
                     asn1::encode(DerValue::bit_string(payload))};
}

Extension make_basic_constraints(bool ca, bool critical) {
    std::vector<DerValue> fields;
    if (ca) fields.push_back(DerValue::boolean(true));  // FALSE is DEFAULT, omitted
    return Extension{ext_oid::basic_constraints, critical,
                     asn1::encode(DerValue::sequence(std::move(fields)))};
}

Extension make_extended_key_usage(const std::vector<asn1::Oid>& purposes) {
    std::vector<DerValue> ids;
    ids.reserve(purposes.size());
    for (const auto& oid : purposes) ids.push_back(DerValue::object_identifier(oid));
    return Extension{ext_oid::extended_key_usage, false,
                     asn1::encode(DerValue::sequence(std::move(ids)))};
}

Bytes read_key_id(const Extension& ext) {
    DerValue v = ext.payload_der();
    if (ext.oid == ext_oid::subject_key_id) return v.read_octet_string();
    if (ext.oid == ext_oid::authority_key_id) {
        for (const DerValue& field : v.children()) {
            if (field.is_context(0)) return field.content();
        }
        throw std::runtime_error("AKI without keyIdentifier field");
    }
    throw std::runtime_error("not a key-identifier extension: " + ext.oid.to_string());
}

BasicConstraintsInfo read_basic_constraints(const Extension& ext) {
    DerValue v = ext.payload_der();
    BasicConstraintsInfo info;
    if (v.child_count() >= 1) info.ca = v.child(0).read_boolean();
    return info;
}

const Extension* find_extension(const std::vector<Extension>& exts, const asn1::Oid& oid) {
    for (const Extension& e : exts) {
        if (e.oid == oid) return &e;
    }
    return nullptr;
}

}  // namespace pqpki::cert
