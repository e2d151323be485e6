#include "pqpki/ocsp/message.hpp"

namespace pqpki::ocsp {

using asn1::DerValue;

const asn1::Oid& basic_response_oid() {
    static const asn1::Oid oid{1, 3, 6, 1, 5, 5, 7, 48, 1, 1};
    return oid;
}

const asn1::Oid& nonce_oid() {
    static const asn1::Oid oid{1, 3, 6, 1, 5, 5, 7, 48, 1, 2};
    return oid;
}

const char* status_name(CertStatusKind k) {
    switch (k) {
        case CertStatusKind::Good: return "good";
        case CertStatusKind::Revoked: return "revoked";
        case CertStatusKind::Unknown: return "unknown";
    }
    return "?";
}

const char* response_status_name(ResponseStatus s) {
    switch (s) {
        case ResponseStatus::Successful: return "successful";
        case ResponseStatus::MalformedRequest: return "malformedRequest";
        case ResponseStatus::InternalError: return "internalError";
        case ResponseStatus::TryLater: return "tryLater";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// CertID

namespace {

DerValue digest_identifier(HashAlg alg) {
    return DerValue::sequence({DerValue::object_identifier(digest_oid(alg))});
}

DerValue nonce_extension(const Bytes& nonce) {
    return DerValue::sequence({
        DerValue::object_identifier(nonce_oid()),
        DerValue::octet_string(asn1::encode(DerValue::octet_string(nonce))),
    });
}

std::optional<Bytes> read_nonce(const DerValue& extensions) {
    for (const DerValue& ext : extensions.children()) {
        if (ext.child_count() < 2) continue;
        if (ext.child(0).read_oid() == nonce_oid()) {
            const Bytes& wrapped = ext.child(ext.child_count() - 1).read_octet_string();
            return asn1::decode(wrapped).read_octet_string();
        }
    }
    return std::nullopt;
}

std::vector<cert::Certificate> read_cert_list(const DerValue& wrapper) {
    std::vector<cert::Certificate> certs;
    for (const DerValue& c : wrapper.child(0).children()) {
        certs.push_back(cert::Certificate::parse(asn1::encode(c)));
    }
    return certs;
}

DerValue cert_list(const std::vector<cert::Certificate>& certs, uint32_t context_number) {
    std::vector<DerValue> entries;
    entries.reserve(certs.size());
    for (const auto& c : certs) entries.push_back(asn1::decode(c.serialize()));
    return DerValue::context(context_number, {DerValue::sequence(std::move(entries))});
}

}  // namespace

asn1::DerValue CertId::to_der() const {
    return DerValue::sequence({
        digest_identifier(hash_alg),
        DerValue::octet_string(issuer_name_hash),
        DerValue::octet_string(issuer_key_hash),
        DerValue::unsigned_integer(serial),
    });
}

CertId CertId::from_der(const asn1::DerValue& der) {
    if (!der.is_universal(asn1::tag::Sequence) || der.child_count() != 4) {
        throw MalformedMessageError("CertID must have 4 fields");
    }
    CertId id;
    id.hash_alg = digest_from_oid(der.child(0).child(0).read_oid());
    id.issuer_name_hash = der.child(1).read_octet_string();
    id.issuer_key_hash = der.child(2).read_octet_string();
    id.serial = der.child(3).read_unsigned_integer();
    if (id.issuer_name_hash.size() != digest_size(id.hash_alg) ||
        id.issuer_key_hash.size() != digest_size(id.hash_alg)) {
        throw MalformedMessageError("hash lengths do not match the digest algorithm");
    }
    return id;
}

CertId make_cert_id(const cert::Certificate& issuer_cert, ByteView subject_serial,
                    HashAlg hash) {
    CertId id;
    id.hash_alg = hash;
    id.issuer_name_hash = digest(hash, issuer_cert.tbs.subject.encode());
    id.issuer_key_hash = digest(hash, issuer_cert.tbs.spki_key);
    id.serial = to_bytes(subject_serial);
    return id;
}

// ---------------------------------------------------------------------------
// request

Bytes OcspRequest::tbs_bytes() const {
    if (cert_ids.empty()) {
        throw MalformedMessageError("a request needs at least one CertID");
    }
    std::vector<DerValue> list;
    list.reserve(cert_ids.size());
    for (const CertId& id : cert_ids) list.push_back(DerValue::sequence({id.to_der()}));
    std::vector<DerValue> fields;
    fields.push_back(DerValue::sequence(std::move(list)));
    if (nonce) {
        fields.push_back(
            DerValue::context(2, {DerValue::sequence({nonce_extension(*nonce)})}));
    }
    return asn1::encode(DerValue::sequence(std::move(fields)));
}

Bytes OcspRequest::serialize() const {
    std::vector<DerValue> fields;
    fields.push_back(asn1::decode(tbs_bytes()));
    if (signature) {
        std::vector<DerValue> sig_fields;
        sig_fields.push_back(cert::algorithm_identifier(signature->algorithm));
        sig_fields.push_back(DerValue::bit_string(signature->signature));
        if (!signature->certs.empty()) {
            sig_fields.push_back(cert_list(signature->certs, 0));
        }
        fields.push_back(DerValue::context(0, {DerValue::sequence(std::move(sig_fields))}));
    }
    return asn1::encode(DerValue::sequence(std::move(fields)));
}

OcspRequest OcspRequest::parse(ByteView der) {
    try {
        DerValue outer = asn1::decode(der);
        if (!outer.is_universal(asn1::tag::Sequence) || outer.child_count() < 1 ||
            outer.child_count() > 2) {
            throw MalformedMessageError("request must have 1 or 2 fields");
        }
        const DerValue& tbs = outer.child(0);
        if (!tbs.is_universal(asn1::tag::Sequence) || tbs.child_count() < 1) {
            throw MalformedMessageError("tbsRequest must be a SEQUENCE");
        }
        OcspRequest req;
        for (const DerValue& r : tbs.child(0).children()) {
            if (r.child_count() != 1) {
                throw MalformedMessageError("Request must hold exactly a CertID");
            }
            req.cert_ids.push_back(CertId::from_der(r.child(0)));
        }
        if (req.cert_ids.empty()) {
            throw MalformedMessageError("request list must not be empty");
        }
        if (tbs.child_count() >= 2) {
            const DerValue& wrap = tbs.child(1);
            if (!wrap.is_context(2) || wrap.child_count() != 1) {
                throw MalformedMessageError("requestExtensions must sit in [2]");
            }
            req.nonce = read_nonce(wrap.child(0));
        }
        if (outer.child_count() == 2) {
            const DerValue& wrap = outer.child(1);
            if (!wrap.is_context(0) || wrap.child_count() != 1) {
                throw MalformedMessageError("optionalSignature must sit in [0]");
            }
            const DerValue& sig = wrap.child(0);
            if (sig.child_count() < 2) {
                throw MalformedMessageError("Signature needs algorithm and value");
            }
            RequestSignature out;
            out.algorithm = cert::read_algorithm_identifier(sig.child(0));
            out.signature = sig.child(1).read_bit_string_payload();
            if (sig.child_count() >= 3) {
                out.certs = read_cert_list(sig.child(2));
            }
            req.signature = std::move(out);
        }
        return req;
    } catch (const MalformedMessageError&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedMessageError(e.what());
    }
}

void sign_request(OcspRequest& request, const algs::KeyPair& key,
                  std::vector<cert::Certificate> signer_chain) {
    RequestSignature sig;
    sig.algorithm = key.algorithm;
    sig.signature = algs::stub_sign(key.algorithm, key.private_key, request.tbs_bytes());
    sig.certs = std::move(signer_chain);
    request.signature = std::move(sig);
}

bool verify_request_signature(const OcspRequest& request) {
    if (!request.signature || request.signature->certs.empty()) return false;
    const cert::Certificate& signer = request.signature->certs.front();
    auto key = cert::find_verification_key(signer, request.signature->algorithm);
    if (!key) return false;
    try {
        return algs::stub_verify(request.signature->algorithm, *key, request.tbs_bytes(),
                                 request.signature->signature);
    } catch (const algs::KeyLengthError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// response

OcspResponse OcspResponse::error(ResponseStatus status) {
    OcspResponse out;
    out.status = status;
    return out;
}

namespace {

DerValue status_to_der(const CertStatus& status) {
    switch (status.kind) {
        case CertStatusKind::Good:
            return DerValue::context_primitive(0, {});
        case CertStatusKind::Revoked: {
            asn1::TimeValue when = status.revocation_time;
            when.encoding = asn1::TimeEncoding::GeneralizedTime;
            return DerValue::context(
                1, {DerValue::time(when),
                    DerValue::context(0, {DerValue::enumerated(int64_t(status.reason))})});
        }
        case CertStatusKind::Unknown:
            return DerValue::context_primitive(2, {});
    }
    throw MalformedMessageError("unreachable status kind");
}

CertStatus status_from_der(const DerValue& der) {
    if (der.is_context(0)) return CertStatus::good();
    if (der.is_context(2)) return CertStatus::unknown();
    if (der.is_context(1)) {
        if (der.child_count() < 1) {
            throw MalformedMessageError("revoked info needs a revocation time");
        }
        CertStatus status;
        status.kind = CertStatusKind::Revoked;
        status.revocation_time = der.child(0).read_time();
        if (der.child_count() >= 2 && der.child(1).is_context(0)) {
            status.reason =
                crl::RevocationReason(der.child(1).child(0).read_enumerated());
        }
        return status;
    }
    throw MalformedMessageError("unknown certStatus tag");
}

DerValue single_to_der(const SingleResponse& single) {
    asn1::TimeValue this_update = single.this_update;
    this_update.encoding = asn1::TimeEncoding::GeneralizedTime;
    return DerValue::sequence({
        single.cert_id.to_der(),
        status_to_der(single.status),
        DerValue::time(this_update),
    });
}

SingleResponse single_from_der(const DerValue& der) {
    if (der.child_count() != 3) {
        throw MalformedMessageError("SingleResponse must have 3 fields");
    }
    SingleResponse out;
    out.cert_id = CertId::from_der(der.child(0));
    out.status = status_from_der(der.child(1));
    out.this_update = der.child(2).read_time();
    return out;
}

}  // namespace

Bytes encode_response_data(const OcspResponse& r) {
    std::vector<DerValue> fields;
    fields.push_back(DerValue::context(2, {DerValue::octet_string(r.responder_key_hash)}));
    asn1::TimeValue produced = r.produced_at;
    produced.encoding = asn1::TimeEncoding::GeneralizedTime;
    fields.push_back(DerValue::time(produced));
    std::vector<DerValue> singles;
    singles.reserve(r.responses.size());
    for (const SingleResponse& s : r.responses) singles.push_back(single_to_der(s));
    fields.push_back(DerValue::sequence(std::move(singles)));
    if (r.nonce) {
        fields.push_back(
            DerValue::context(1, {DerValue::sequence({nonce_extension(*r.nonce)})}));
    }
    return asn1::encode(DerValue::sequence(std::move(fields)));
}

Bytes OcspResponse::serialize() const {
    std::vector<DerValue> fields;
    fields.push_back(DerValue::enumerated(int64_t(status)));
    if (is_success()) {
        Bytes data = response_data_der.empty() ? encode_response_data(*this)
                                               : response_data_der;
        std::vector<DerValue> basic_fields;
        basic_fields.push_back(asn1::decode(data));
        basic_fields.push_back(cert::algorithm_identifier(signature_alg));
        basic_fields.push_back(DerValue::bit_string(signature));
        if (!certs.empty()) basic_fields.push_back(cert_list(certs, 0));
        Bytes basic = asn1::encode(DerValue::sequence(std::move(basic_fields)));

        fields.push_back(DerValue::context(
            0, {DerValue::sequence({DerValue::object_identifier(basic_response_oid()),
                                    DerValue::octet_string(basic)})}));
    }
    return asn1::encode(DerValue::sequence(std::move(fields)));
}

OcspResponse OcspResponse::parse(ByteView der) {
    try {
        DerValue outer = asn1::decode(der);
        if (!outer.is_universal(asn1::tag::Sequence) || outer.child_count() < 1) {
            throw MalformedMessageError("response must be a SEQUENCE");
        }
        OcspResponse out;
        out.status = ResponseStatus(outer.child(0).read_enumerated());
        if (out.status != ResponseStatus::Successful) {
            if (outer.child_count() != 1) {
                throw MalformedMessageError("error responses must not carry a body");
            }
            return out;
        }
        if (outer.child_count() != 2 || !outer.child(1).is_context(0)) {
            throw MalformedMessageError("successful response needs responseBytes in [0]");
        }
        const DerValue& rb = outer.child(1).child(0);
        if (rb.child_count() != 2 || rb.child(0).read_oid() != basic_response_oid()) {
            throw MalformedMessageError("unsupported responseType");
        }
        DerValue basic = asn1::decode(rb.child(1).read_octet_string());
        if (basic.child_count() < 3) {
            throw MalformedMessageError("BasicOCSPResponse needs 3 fields");
        }
        const DerValue& data = basic.child(0);
        out.response_data_der = asn1::encode(data);
        if (data.child_count() < 3 || !data.child(0).is_context(2)) {
            throw MalformedMessageError("ResponseData must lead with a keyed responderID");
        }
        out.responder_key_hash = data.child(0).child(0).read_octet_string();
        out.produced_at = data.child(1).read_time();
        for (const DerValue& s : data.child(2).children()) {
            out.responses.push_back(single_from_der(s));
        }
        if (data.child_count() >= 4 && data.child(3).is_context(1)) {
            out.nonce = read_nonce(data.child(3).child(0));
        }
        out.signature_alg = cert::read_algorithm_identifier(basic.child(1));
        out.signature = basic.child(2).read_bit_string_payload();
        if (basic.child_count() >= 4) {
            out.certs = read_cert_list(basic.child(3));
        }
        return out;
    } catch (const MalformedMessageError&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedMessageError(e.what());
    }
}

}  // namespace pqpki::ocsp
