/**
 * X.509v3 extensions. An Extension keeps the inner extnValue DER (the
 * OCTET STRING wrapping is applied at certificate encode/parse time).
 *
 * The alternative-signature triple (subjectAltPublicKeyInfo,
 * altSignatureAlgorithm, altSignatureValue) uses the 2.5.29.72/73/74 arcs.
 */

#ifndef PQPKI_CERT_EXTENSION_HPP
#define PQPKI_CERT_EXTENSION_HPP

#include <optional>
#include <vector>

#include "pqpki/algs/registry.hpp"
#include "pqpki/asn1/der.hpp"
#include "pqpki/digest.hpp"

namespace pqpki::cert {

namespace ext_oid {
inline const asn1::Oid subject_key_id{2, 5, 29, 14};
inline const asn1::Oid key_usage{2, 5, 29, 15};
inline const asn1::Oid basic_constraints{2, 5, 29, 19};
inline const asn1::Oid crl_number{2, 5, 29, 20};
inline const asn1::Oid crl_reason{2, 5, 29, 21};
inline const asn1::Oid authority_key_id{2, 5, 29, 35};
inline const asn1::Oid extended_key_usage{2, 5, 29, 37};
inline const asn1::Oid subject_alt_public_key_info{2, 5, 29, 72};
inline const asn1::Oid alt_signature_algorithm{2, 5, 29, 73};
inline const asn1::Oid alt_signature_value{2, 5, 29, 74};
}  // namespace ext_oid

struct Extension {
    asn1::Oid oid;
    bool critical = false;
    Bytes payload;  // inner extnValue DER

    asn1::DerValue payload_der() const { return asn1::decode(payload); }
    bool operator==(const Extension&) const = default;
};

// keyIdentifier builders; default SHA-1 (20 bytes) for compatibility.
Extension make_ski(ByteView subject_public_key, HashAlg hash = HashAlg::Sha1);
Extension make_aki(ByteView issuer_public_key, HashAlg hash = HashAlg::Sha1);
Extension make_aki_from_key_id(ByteView key_id);

struct KeyUsageBits {
    bool digital_signature = false;
    bool key_cert_sign = false;
    bool crl_sign = false;
};
Extension make_key_usage(KeyUsageBits bits, bool critical);

Extension make_basic_constraints(bool ca, bool critical);
Extension make_extended_key_usage(const std::vector<asn1::Oid>& purposes);

// extnValue payload readers
Bytes read_key_id(const Extension& ext);  // SKI or AKI
struct BasicConstraintsInfo {
    bool ca = false;
};
BasicConstraintsInfo read_basic_constraints(const Extension& ext);

const Extension* find_extension(const std::vector<Extension>& exts, const asn1::Oid& oid);

}  // namespace pqpki::cert

#endif
