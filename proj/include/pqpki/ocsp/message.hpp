/**
 * OCSP request/response wire model.
 *
 * Requests carry one CertID per queried certificate (digest algorithm,
 * issuer name hash, issuer key hash, serial) plus an optional nonce and an
 * optional signature over the request body. Responses are either an
 * unsigned error status or a signed success body with one Good / Revoked /
 * Unknown status per requested certificate, keyed responder ID, nonce echo
 * and the responder certificate chain.
 */

#ifndef PQPKI_OCSP_MESSAGE_HPP
#define PQPKI_OCSP_MESSAGE_HPP

#include <optional>

#include "pqpki/cert/certificate.hpp"
#include "pqpki/crl/crl.hpp"

namespace pqpki::ocsp {

struct MalformedMessageError : std::runtime_error {
    explicit MalformedMessageError(const std::string& what)
        : std::runtime_error("malformed OCSP message: " + what) {}
};

// id-pkix-ocsp-basic and the nonce extension
const asn1::Oid& basic_response_oid();
const asn1::Oid& nonce_oid();

struct CertId {
    HashAlg hash_alg = HashAlg::Sha1;
    Bytes issuer_name_hash;
    Bytes issuer_key_hash;
    Bytes serial;

    asn1::DerValue to_der() const;
    static CertId from_der(const asn1::DerValue& der);
    bool operator==(const CertId&) const = default;
};

// issuer_name_hash = digest(DER of the issuer cert's subject DN);
// issuer_key_hash = digest(issuer subject key bytes)
CertId make_cert_id(const cert::Certificate& issuer_cert, ByteView subject_serial,
                    HashAlg hash = HashAlg::Sha1);

struct RequestSignature {
    algs::AlgorithmDescriptor algorithm;
    Bytes signature;
    std::vector<cert::Certificate> certs;  // signer certificate first
};

struct OcspRequest {
    std::vector<CertId> cert_ids;  // non-empty
    std::optional<Bytes> nonce;
    std::optional<RequestSignature> signature;

    Bytes tbs_bytes() const;  // what an optional signature covers
    Bytes serialize() const;
    static OcspRequest parse(ByteView der);
};

// computes the signature over tbs_bytes() and attaches the signer chain
void sign_request(OcspRequest& request, const algs::KeyPair& key,
                  std::vector<cert::Certificate> signer_chain);
bool verify_request_signature(const OcspRequest& request);

enum class CertStatusKind { Good, Revoked, Unknown };
const char* status_name(CertStatusKind k);

struct CertStatus {
    CertStatusKind kind = CertStatusKind::Good;
    asn1::TimeValue revocation_time;  // Revoked only
    crl::RevocationReason reason = crl::RevocationReason::Unspecified;

    static CertStatus good() { return {}; }
    static CertStatus unknown() { return {CertStatusKind::Unknown, {}, {}}; }
    static CertStatus revoked(asn1::TimeValue when, crl::RevocationReason why) {
        return {CertStatusKind::Revoked, when, why};
    }
};

struct SingleResponse {
    CertId cert_id;
    CertStatus status;
    asn1::TimeValue this_update;
};

enum class ResponseStatus {
    Successful = 0,
    MalformedRequest = 1,
    InternalError = 2,
    TryLater = 3,
};
const char* response_status_name(ResponseStatus s);

struct OcspResponse {
    ResponseStatus status = ResponseStatus::Successful;

    // success body; meaningful only when status == Successful
    Bytes responder_key_hash;  // SHA-1 of the responder's signing public key
    asn1::TimeValue produced_at;
    std::vector<SingleResponse> responses;
    std::optional<Bytes> nonce;
    algs::AlgorithmDescriptor signature_alg;
    Bytes signature;
    std::vector<cert::Certificate> certs;  // responder certificate first
    Bytes response_data_der;               // exact signed bytes

    bool is_success() const { return status == ResponseStatus::Successful; }
    static OcspResponse error(ResponseStatus status);

    Bytes serialize() const;
    static OcspResponse parse(ByteView der);
};

// DER of the ResponseData body (what the responder signature covers).
Bytes encode_response_data(const OcspResponse& response);

}  // namespace pqpki::ocsp

#endif
