/**
 * OCSP responder core: a thread-safe revocation view over one CA and the
 * response builder. Undecodable requests produce an unsigned
 * malformedRequest error; every successful response is signed with the
 * responder identity's key.
 */

#ifndef PQPKI_OCSP_RESPONDER_HPP
#define PQPKI_OCSP_RESPONDER_HPP

#include <map>
#include <set>
#include <shared_mutex>

#include "pqpki/ocsp/message.hpp"

namespace pqpki::ocsp {

// Revocation state for one issuing CA. Reads are concurrent; revocations
// take the writer lock.
class CaView {
public:
    explicit CaView(cert::Certificate ca_cert);

    void add_issued(ByteView serial);
    bool revoke(ByteView serial, asn1::TimeValue when, crl::RevocationReason reason);

    CertStatus status_of(ByteView serial) const;
    bool matches_issuer(const CertId& id) const;

    const cert::Certificate& ca_cert() const { return ca_cert_; }
    std::vector<crl::RevokedEntry> revoked_entries() const;  // sorted by serial
    size_t issued_count() const;

private:
    cert::Certificate ca_cert_;
    Bytes name_hash_[2];  // per HashAlg
    Bytes key_hash_[2];
    mutable std::shared_mutex mutex_;
    std::set<Bytes> issued_;
    std::map<Bytes, std::pair<asn1::TimeValue, crl::RevocationReason>> revoked_;
};

struct ResponderIdentity {
    cert::Certificate certificate;
    algs::KeyPair key;  // must match a key carried by the certificate
    std::vector<cert::Certificate> extra_chain;
};

OcspResponse respond(const OcspRequest& request, const CaView& view,
                     const ResponderIdentity& identity, asn1::TimeValue now);

// Wire-level entry point used by the HTTP service.
Bytes respond_to_bytes(ByteView raw_request, const CaView& view,
                       const ResponderIdentity& identity, asn1::TimeValue now);

}  // namespace pqpki::ocsp

#endif
