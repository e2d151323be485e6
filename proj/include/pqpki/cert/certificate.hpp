/**
 * X.509v3 certificate model covering the transition formats:
 *
 *   Pure      - PQ (or classical) key in Subject Public Key Info, single
 *               signature in the base fields.
 *   Hybrid    - classical key/signature in the base fields plus the PQ key,
 *               algorithm and signature in three non-critical extensions.
 *               The alt signature covers the TBS including the alt key and
 *               alt algorithm extensions but excluding altSignatureValue;
 *               the base signature covers the full TBS, alt extensions
 *               included.
 *   Composite - Subject Public Key Info and signature each carry a
 *               SEQUENCE of (AlgorithmIdentifier, BIT STRING) component
 *               pairs under the composite container OID; every component
 *               signs the same TBS bytes and all must verify.
 *
 * Certificates keep the exact DER of their TBS so signature checks always
 * run over the bytes that were signed.
 */

#ifndef PQPKI_CERT_CERTIFICATE_HPP
#define PQPKI_CERT_CERTIFICATE_HPP

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pqpki/algs/stub_signer.hpp"
#include "pqpki/cert/extension.hpp"
#include "pqpki/cert/name.hpp"

namespace pqpki::cert {

struct Validity {
    asn1::TimeValue not_before;
    asn1::TimeValue not_after;
    bool operator==(const Validity&) const = default;
};

enum class CertFormat { Pure, Hybrid, Composite };
const char* format_name(CertFormat f);

enum class Profile { CaCert, EndEntity, OcspResponder };

struct MalformedCertificateError : std::runtime_error {
    explicit MalformedCertificateError(const std::string& what, size_t offset = 0)
        : std::runtime_error("malformed certificate: " + what + " (offset " +
                             std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

struct InvalidValidityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MixedRoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComponentCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NestedCompositeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateAlgorithmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// AlgorithmIdentifier ::= SEQUENCE { algorithm OID }

asn1::DerValue algorithm_identifier(const algs::AlgorithmDescriptor& desc);
const algs::AlgorithmDescriptor& read_algorithm_identifier(const asn1::DerValue& der);

// ---------------------------------------------------------------------------
// Composite descriptors: ordered component list plus a synthesized
// descriptor whose sizes are the component sums plus DER structure overhead.

struct CompositeDescriptor {
    std::vector<algs::AlgorithmDescriptor> components;
    algs::AlgorithmDescriptor synthesized;

    // throws ComponentCountError (< 2) / NestedCompositeError
    static CompositeDescriptor make(std::vector<algs::AlgorithmDescriptor> components);
};

struct ComponentKey {
    algs::AlgorithmDescriptor algorithm;
    Bytes public_key;
};
struct ComponentSignature {
    algs::AlgorithmDescriptor algorithm;
    Bytes signature;
};

Bytes encode_composite_key(std::span<const ComponentKey> components);
std::vector<ComponentKey> decode_composite_key(ByteView blob);
Bytes encode_composite_signature(std::span<const ComponentSignature> components);
std::vector<ComponentSignature> decode_composite_signature(ByteView blob);

// ---------------------------------------------------------------------------

struct TbsCertificate {
    Bytes serial;  // unsigned big-endian magnitude, > 0
    algs::AlgorithmDescriptor signature_alg;
    DistinguishedName issuer;
    Validity validity;
    DistinguishedName subject;
    algs::AlgorithmDescriptor spki_alg;
    Bytes spki_key;  // BIT STRING payload: raw key, or composite component DER
    std::vector<Extension> extensions;

    asn1::DerValue to_der() const;
    Bytes encode() const { return asn1::encode(to_der()); }
    static TbsCertificate from_der(const asn1::DerValue& der);

    const Extension* find_ext(const asn1::Oid& oid) const {
        return find_extension(extensions, oid);
    }
};

struct Certificate {
    TbsCertificate tbs;
    Bytes signature;  // outer BIT STRING payload
    Bytes tbs_der;    // exact bytes the signature covers
    CertFormat format = CertFormat::Pure;

    const algs::AlgorithmDescriptor& signature_alg() const { return tbs.signature_alg; }

    Bytes serialize() const;
    static Certificate parse(ByteView der);

    const Extension* find_ext(const asn1::Oid& oid) const { return tbs.find_ext(oid); }

    // Hybrid accessors (nullopt when the extension is absent)
    std::optional<ComponentKey> alt_public_key() const;
    std::optional<algs::AlgorithmDescriptor> alt_signature_alg() const;
    std::optional<Bytes> alt_signature() const;

    // Composite accessors
    std::vector<ComponentKey> composite_keys() const;           // from spki_key
    std::vector<ComponentSignature> composite_signatures() const;

    // SKI payload if present, else SHA-1 of the subject key bytes.
    Bytes key_id() const;

    bool is_self_signed() const { return tbs.issuer == tbs.subject; }

    bool operator==(const Certificate& other) const {
        return serialize() == other.serialize();
    }
};

// ---------------------------------------------------------------------------
// builders

struct IssueParams {
    Bytes serial;
    DistinguishedName subject;
    DistinguishedName issuer;
    Validity validity;
    Profile profile = Profile::EndEntity;
    HashAlg key_id_hash = HashAlg::Sha1;
    Bytes issuer_key_id;  // empty: derived from the signing key material
    // Emulates foreign issuers that (incorrectly) mark the alt triple
    // critical; builders normally emit them non-critical.
    bool mark_alt_critical = false;
};

Certificate build_pure(const IssueParams& params, const algs::AlgorithmDescriptor& subject_alg,
                       ByteView subject_public_key, const algs::KeyPair& issuer_key);

Certificate build_hybrid(const IssueParams& params,
                         const algs::AlgorithmDescriptor& subject_base_alg,
                         ByteView subject_base_key,
                         const algs::AlgorithmDescriptor& subject_alt_alg,
                         ByteView subject_alt_key, const algs::KeyPair& issuer_base_key,
                         const algs::KeyPair& issuer_alt_key);

Certificate build_composite(const IssueParams& params,
                            std::span<const ComponentKey> subject_components,
                            std::span<const algs::KeyPair> issuer_components);

// ---------------------------------------------------------------------------
// parallel certificate chains: one independent chain per algorithm for the
// same subject identity

struct ChainIssuer {
    std::vector<Certificate> chain;  // issuing CA first, up to its root
    algs::KeyPair key;               // signing key of chain.front()
};

struct ParallelChain {
    std::vector<Certificate> chain;  // leaf first
    algs::KeyPair leaf_key;
};

std::vector<ParallelChain> make_parallel_chains(
    const DistinguishedName& subject, std::span<const algs::AlgorithmDescriptor> algorithms,
    std::span<const ChainIssuer> issuers, const Validity& validity,
    const std::function<Bytes()>& next_serial, ByteView seed);

// ---------------------------------------------------------------------------
// verification helpers

// Locates the public key inside `holder` that matches `alg`: the base
// subject key, a hybrid alt key, or a composite component key.
std::optional<Bytes> find_verification_key(const Certificate& holder,
                                           const algs::AlgorithmDescriptor& alg);

// Base (outer) signature of `subject` against keys held by `issuer_cert`.
bool verify_base_signature(const Certificate& subject, const Certificate& issuer_cert);

// Hybrid alt signature: covers the TBS with altSignatureValue removed.
bool verify_alt_signature(const Certificate& subject, const Certificate& issuer_cert);

// Composite: every component must verify; returns per-component results.
struct CompositeCheck {
    bool all_ok = false;
    std::vector<bool> component_ok;
};
CompositeCheck verify_composite_signature(const Certificate& subject,
                                          const Certificate& issuer_cert);

Bytes alt_tbs_bytes(const TbsCertificate& tbs);  // TBS' for alt-signature checks

}  // namespace pqpki::cert

#endif
