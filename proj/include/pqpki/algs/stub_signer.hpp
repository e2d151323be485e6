/**
 * Pluggable signer/verifier contract and the deterministic size-faithful
 * stub implementation.
 *
 * The stub derives all material by hash expansion (SHAKE256):
 *
 *   private_key = expand(seed || "priv", private_key_size)
 *   public_key  = expand(sha256(private_key) || "pub", public_key_size)
 *   signature   = expand(sha256(private_key) || sha256(message), signature_size)
 *
 * so keys and signatures have exactly the registered algorithm's byte sizes
 * and the same inputs always reproduce the same outputs. Verification is
 * public-key-driven: keygen records sha256(private_key) in a process-wide
 * table keyed by the public key, and verify recomputes the signature from
 * that table entry. Processes that load key material from disk call
 * register_keypair() to rebuild their table.
 */

#ifndef PQPKI_ALGS_STUB_SIGNER_HPP
#define PQPKI_ALGS_STUB_SIGNER_HPP

#include <stdexcept>

#include "pqpki/algs/registry.hpp"
#include "pqpki/bytes.hpp"

namespace pqpki::algs {

struct KeyPair {
    AlgorithmDescriptor algorithm;
    Bytes public_key;
    Bytes private_key;
};

struct KeyLengthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SignerContract: any implementation must emit signatures of exactly
// descriptor.signature_size bytes and satisfy verify(pk, m, sign(sk, m)).
class Signer {
public:
    virtual ~Signer() = default;
    virtual KeyPair keygen(const AlgorithmDescriptor& desc, ByteView seed) const = 0;
    virtual Bytes sign(const AlgorithmDescriptor& desc, ByteView private_key,
                       ByteView message) const = 0;
    virtual bool verify(const AlgorithmDescriptor& desc, ByteView public_key,
                        ByteView message, ByteView signature) const = 0;
};

class StubSigner final : public Signer {
public:
    KeyPair keygen(const AlgorithmDescriptor& desc, ByteView seed) const override;
    Bytes sign(const AlgorithmDescriptor& desc, ByteView private_key,
               ByteView message) const override;
    bool verify(const AlgorithmDescriptor& desc, ByteView public_key, ByteView message,
                ByteView signature) const override;
};

const Signer& stub_signer();

KeyPair stub_keygen(const AlgorithmDescriptor& desc, ByteView seed);
Bytes stub_sign(const AlgorithmDescriptor& desc, ByteView private_key, ByteView message);
bool stub_verify(const AlgorithmDescriptor& desc, ByteView public_key, ByteView message,
                 ByteView signature);

// Rebuilds the pk -> signing-secret-hash mapping for a key loaded from disk.
// Returns the derived public key.
Bytes register_keypair(const AlgorithmDescriptor& desc, ByteView private_key);

}  // namespace pqpki::algs

#endif
