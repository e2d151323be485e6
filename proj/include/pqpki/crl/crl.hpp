/**
 * Version-2 certificate revocation lists with pure, hybrid and composite
 * signing modes.
 *
 * Hybrid CRLs mirror the certificate approach: the base signature is
 * classical and the PQ algorithm/signature pair rides in the non-critical
 * altSignatureAlgorithm / altSignatureValue CRL extensions. The alt
 * signature covers the TBS including altSignatureAlgorithm but excluding
 * altSignatureValue. Composite CRLs put a component sequence in the
 * signature value, like composite certificates.
 *
 * Entries are kept sorted ascending by serial so lookups can run as a
 * binary search.
 */

#ifndef PQPKI_CRL_CRL_HPP
#define PQPKI_CRL_CRL_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "pqpki/cert/certificate.hpp"

namespace pqpki::crl {

enum class RevocationReason : int {
    Unspecified = 0,
    KeyCompromise = 1,
    CaCompromise = 2,
    Superseded = 4,
    CessationOfOperation = 5,
};

const char* reason_name(RevocationReason r);
RevocationReason reason_from_name(std::string_view name);  // throws std::invalid_argument

struct RevokedEntry {
    Bytes serial;  // unsigned big-endian magnitude, > 0
    asn1::TimeValue revocation_time;
    RevocationReason reason = RevocationReason::Unspecified;

    bool operator==(const RevokedEntry&) const = default;
};

// magnitude order: shorter first, then lexicographic
int compare_serials(ByteView a, ByteView b);

enum class CrlMode { Pure, Hybrid, Composite };

struct ModeKeyMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsortedEntriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedCrlError : std::runtime_error {
    explicit MalformedCrlError(const std::string& what, size_t offset = 0)
        : std::runtime_error("malformed CRL: " + what + " (offset " +
                             std::to_string(offset) + ")") {}
};

struct RevocationList {
    algs::AlgorithmDescriptor signature_alg;
    cert::DistinguishedName issuer;
    asn1::TimeValue this_update;
    asn1::TimeValue next_update;
    std::vector<RevokedEntry> entries;
    std::vector<cert::Extension> extensions;  // AKI + CRL number (+ alt pair)
    Bytes signature;                          // outer BIT STRING payload
    Bytes tbs_der;

    Bytes serialize() const;
    static RevocationList parse(ByteView der);

    const cert::Extension* find_ext(const asn1::Oid& oid) const {
        return cert::find_extension(extensions, oid);
    }
    uint64_t crl_number() const;  // from the CRL number extension
    std::optional<algs::AlgorithmDescriptor> alt_signature_alg() const;
    std::optional<Bytes> alt_signature() const;
};

struct CrlParams {
    cert::DistinguishedName issuer;
    asn1::TimeValue this_update;
    asn1::TimeValue next_update;  // must follow this_update
    uint64_t crl_number = 1;
    Bytes issuer_key_id;  // empty: derived from the signing key
    HashAlg key_id_hash = HashAlg::Sha1;
};

// keys per mode: Pure exactly one; Hybrid exactly [classical, PQ];
// Composite at least two. Entries must arrive sorted by serial with no
// duplicates.
RevocationList build_crl(const CrlParams& params, std::span<const RevokedEntry> entries,
                         CrlMode mode, std::span<const algs::KeyPair> keys);

// binary search over the sorted entry list; caller verifies signatures
std::optional<RevokedEntry> is_revoked(const RevocationList& crl, ByteView serial);

// base (outer) and alt signatures against the issuing CA certificate
bool verify_crl_base(const RevocationList& crl, const cert::Certificate& ca_cert);
bool verify_crl_alt(const RevocationList& crl, const cert::Certificate& ca_cert);

struct CrlSizeReport {
    size_t total_bytes = 0;
    size_t header_bytes = 0;     // everything but entries and raw signature
    size_t entries_bytes = 0;    // the revokedCertificates element
    size_t signature_bytes = 0;  // raw signature payload
};
CrlSizeReport crl_size_report(const RevocationList& crl);

}  // namespace pqpki::crl

#endif
