#include "pqpki/ocsp/client.hpp"

#include <httplib.h>

#include <chrono>

namespace pqpki::ocsp {

namespace {

using Clock = std::chrono::steady_clock;

int64_t elapsed_us(Clock::time_point from, Clock::time_point to) {
    return std::chrono::duration_cast<std::chrono::microseconds>(to - from).count();
}

}  // namespace

bool verify_response_signature(const OcspResponse& response,
                               const cert::Certificate& issuer_cert) {
    if (!response.is_success()) return false;

    // the responder is either the embedded delegated certificate or the CA
    const cert::Certificate* responder =
        response.certs.empty() ? &issuer_cert : &response.certs.front();

    auto key = cert::find_verification_key(*responder, response.signature_alg);
    if (!key) return false;
    if (sha1(*key) != response.responder_key_hash) return false;
    try {
        if (!algs::stub_verify(response.signature_alg, *key, response.response_data_der,
                               response.signature)) {
            return false;
        }
    } catch (const algs::KeyLengthError&) {
        return false;
    }

    // a delegated responder certificate must come from the CA itself
    if (!response.certs.empty() && responder->serialize() != issuer_cert.serialize()) {
        if (!cert::verify_base_signature(*responder, issuer_cert)) return false;
    }
    return true;
}

QueryResult query(const std::string& url, const cert::Certificate& issuer_cert,
                  std::span<const Bytes> serials, const QueryOptions& options) {
    auto t0 = Clock::now();

    OcspRequest request;
    for (const Bytes& serial : serials) {
        request.cert_ids.push_back(make_cert_id(issuer_cert, serial, options.digest));
    }
    if (options.use_nonce) {
        // derive a request-unique nonce from the serial material
        Bytes material;
        for (const Bytes& s : serials) append(material, s);
        material.push_back(uint8_t(Clock::now().time_since_epoch().count() & 0xFF));
        request.nonce = shake256(material, 16);
    }
    if (options.sign) {
        sign_request(request, options.sign->key, {options.sign->certificate});
    }
    Bytes wire = request.serialize();
    auto t_built = Clock::now();

    size_t split = url.rfind("/ocsp");
    std::string base = split == std::string::npos ? url : url.substr(0, split);
    httplib::Client client(base);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(30, 0);

    auto posted = client.Post("/ocsp", std::string(wire.begin(), wire.end()),
                              "application/ocsp-request");
    auto t_reply = Clock::now();
    if (!posted) {
        throw TransportError("POST " + url + " failed: " + httplib::to_string(posted.error()));
    }
    if (posted->status != 200) {
        throw TransportError("POST " + url + " returned HTTP " +
                             std::to_string(posted->status));
    }

    QueryResult result;
    result.timing.bytes_out = wire.size();
    result.timing.bytes_in = posted->body.size();

    ByteView body(reinterpret_cast<const uint8_t*>(posted->body.data()),
                  posted->body.size());
    result.response = OcspResponse::parse(body);

    if (result.response.is_success() && options.verify_response) {
        if (!verify_response_signature(result.response, issuer_cert)) {
            throw ResponseVerifyError("response signature verification failed");
        }
        if (request.nonce && result.response.nonce != request.nonce) {
            throw NonceMismatchError("response nonce does not match the request");
        }
    }
    auto t_done = Clock::now();

    result.timing.request_build_us = elapsed_us(t0, t_built);
    result.timing.network_round_trip_us = elapsed_us(t_built, t_reply);
    result.timing.verify_us = elapsed_us(t_reply, t_done);
    result.timing.total_us = elapsed_us(t0, t_done);
    return result;
}

}  // namespace pqpki::ocsp
