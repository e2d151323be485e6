/**
 * OCSP client with per-transaction timing capture: request build time,
 * network round trip, response verification time and byte counts, so the
 * cost of large PQ responder certificates is measurable end to end.
 */

#ifndef PQPKI_OCSP_CLIENT_HPP
#define PQPKI_OCSP_CLIENT_HPP

#include <optional>
#include <string>

#include "pqpki/ocsp/message.hpp"

namespace pqpki::ocsp {

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResponseVerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonceMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimingRecord {
    int64_t request_build_us = 0;
    int64_t network_round_trip_us = 0;
    int64_t verify_us = 0;
    int64_t total_us = 0;
    size_t bytes_out = 0;
    size_t bytes_in = 0;
};

struct SignIdentity {
    algs::KeyPair key;
    cert::Certificate certificate;
};

struct QueryOptions {
    HashAlg digest = HashAlg::Sha1;
    bool use_nonce = true;
    std::optional<SignIdentity> sign;  // sign the request with this identity
    bool verify_response = true;
};

struct QueryResult {
    OcspResponse response;
    TimingRecord timing;
};

// POSTs one request for `serials` (issued by `issuer_cert`) to `url`.
// Throws TransportError / ResponseVerifyError / NonceMismatchError.
QueryResult query(const std::string& url, const cert::Certificate& issuer_cert,
                  std::span<const Bytes> serials, const QueryOptions& options = {});

// Checks the response signature against the embedded responder certificate
// and the responder certificate against the issuing CA.
bool verify_response_signature(const OcspResponse& response,
                               const cert::Certificate& issuer_cert);

}  // namespace pqpki::ocsp

#endif
