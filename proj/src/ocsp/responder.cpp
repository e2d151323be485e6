#include "pqpki/ocsp/responder.hpp"

#include <mutex>

namespace pqpki::ocsp {

CaView::CaView(cert::Certificate ca_cert) : ca_cert_(std::move(ca_cert)) {
    Bytes name_der = ca_cert_.tbs.subject.encode();
    for (HashAlg alg : {HashAlg::Sha1, HashAlg::Sha256}) {
        name_hash_[int(alg)] = digest(alg, name_der);
        key_hash_[int(alg)] = digest(alg, ca_cert_.tbs.spki_key);
    }
}

void CaView::add_issued(ByteView serial) {
    std::unique_lock lock(mutex_);
    issued_.insert(to_bytes(serial));
}

bool CaView::revoke(ByteView serial, asn1::TimeValue when, crl::RevocationReason reason) {
    std::unique_lock lock(mutex_);
    Bytes key = to_bytes(serial);
    if (!issued_.contains(key)) return false;
    revoked_.emplace(std::move(key), std::make_pair(when, reason));
    return true;
}

CertStatus CaView::status_of(ByteView serial) const {
    std::shared_lock lock(mutex_);
    Bytes key = to_bytes(serial);
    if (auto it = revoked_.find(key); it != revoked_.end()) {
        return CertStatus::revoked(it->second.first, it->second.second);
    }
    if (issued_.contains(key)) return CertStatus::good();
    return CertStatus::unknown();
}

bool CaView::matches_issuer(const CertId& id) const {
    return id.issuer_name_hash == name_hash_[int(id.hash_alg)] &&
           id.issuer_key_hash == key_hash_[int(id.hash_alg)];
}

std::vector<crl::RevokedEntry> CaView::revoked_entries() const {
    std::shared_lock lock(mutex_);
    std::vector<crl::RevokedEntry> out;
    out.reserve(revoked_.size());
    for (const auto& [serial, info] : revoked_) {
        out.push_back({serial, info.first, info.second});  // map keeps serial order
    }
    return out;
}

size_t CaView::issued_count() const {
    std::shared_lock lock(mutex_);
    return issued_.size();
}

OcspResponse respond(const OcspRequest& request, const CaView& view,
                     const ResponderIdentity& identity, asn1::TimeValue now) {
    OcspResponse response;
    response.status = ResponseStatus::Successful;
    response.responder_key_hash = sha1(identity.key.public_key);
    response.produced_at = now;
    response.nonce = request.nonce;

    for (const CertId& id : request.cert_ids) {
        SingleResponse single;
        single.cert_id = id;
        single.this_update = now;
        single.status = view.matches_issuer(id) ? view.status_of(id.serial)
                                                : CertStatus::unknown();
        response.responses.push_back(std::move(single));
    }

    response.certs.push_back(identity.certificate);
    response.certs.insert(response.certs.end(), identity.extra_chain.begin(),
                          identity.extra_chain.end());

    response.signature_alg = identity.key.algorithm;
    response.response_data_der = encode_response_data(response);
    response.signature = algs::stub_sign(identity.key.algorithm, identity.key.private_key,
                                         response.response_data_der);
    return response;
}

Bytes respond_to_bytes(ByteView raw_request, const CaView& view,
                       const ResponderIdentity& identity, asn1::TimeValue now) {
    OcspRequest request;
    try {
        request = OcspRequest::parse(raw_request);
    } catch (const std::exception&) {
        return OcspResponse::error(ResponseStatus::MalformedRequest).serialize();
    }
    try {
        return respond(request, view, identity, now).serialize();
    } catch (const std::exception&) {
        return OcspResponse::error(ResponseStatus::InternalError).serialize();
    }
}

}  // namespace pqpki::ocsp
