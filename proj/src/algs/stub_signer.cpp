#include "pqpki/algs/stub_signer.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "pqpki/digest.hpp"

namespace pqpki::algs {

namespace {

// pk -> sha256(private_key); append-only, shared across the process so that
// verification only needs the public key.
class SecretTable {
public:
    static SecretTable& instance() {
        static SecretTable table;
        return table;
    }

    void put(const Bytes& public_key, const Bytes& secret) {
        std::unique_lock lock(mutex_);
        map_.emplace(public_key, secret);
    }

    std::optional<Bytes> get(ByteView public_key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(Bytes(public_key.begin(), public_key.end()));
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Bytes, Bytes> map_;
};

Bytes expand(ByteView prefix, ByteView suffix, size_t out_len) {
    Bytes input;
    input.reserve(prefix.size() + suffix.size());
    append(input, prefix);
    append(input, suffix);
    return shake256(input, out_len);
}

Bytes derive_public(const AlgorithmDescriptor& desc, const Bytes& secret) {
    return expand(secret, as_view("pub"), desc.public_key_size);
}

}  // namespace

KeyPair StubSigner::keygen(const AlgorithmDescriptor& desc, ByteView seed) const {
    Bytes private_key = expand(seed, as_view("priv"), desc.private_key_size);
    Bytes secret = sha256(private_key);
    Bytes public_key = derive_public(desc, secret);
    SecretTable::instance().put(public_key, secret);
    return KeyPair{desc, std::move(public_key), std::move(private_key)};
}

Bytes StubSigner::sign(const AlgorithmDescriptor& desc, ByteView private_key,
                       ByteView message) const {
    if (private_key.size() != desc.private_key_size) {
        throw KeyLengthError("private key length " + std::to_string(private_key.size()) +
                             " does not match " + desc.name);
    }
    return expand(sha256(private_key), sha256(message), desc.signature_size);
}

bool StubSigner::verify(const AlgorithmDescriptor& desc, ByteView public_key,
                        ByteView message, ByteView signature) const {
    if (public_key.size() != desc.public_key_size) {
        throw KeyLengthError("public key length " + std::to_string(public_key.size()) +
                             " does not match " + desc.name);
    }
    if (signature.size() != desc.signature_size) {
        throw KeyLengthError("signature length " + std::to_string(signature.size()) +
                             " does not match " + desc.name);
    }
    auto secret = SecretTable::instance().get(public_key);
    if (!secret) return false;
    Bytes expected = expand(*secret, sha256(message), desc.signature_size);
    return equal_ct(expected, signature);
}

const Signer& stub_signer() {
    static const StubSigner signer;
    return signer;
}

KeyPair stub_keygen(const AlgorithmDescriptor& desc, ByteView seed) {
    return stub_signer().keygen(desc, seed);
}

Bytes stub_sign(const AlgorithmDescriptor& desc, ByteView private_key, ByteView message) {
    return stub_signer().sign(desc, private_key, message);
}

bool stub_verify(const AlgorithmDescriptor& desc, ByteView public_key, ByteView message,
                 ByteView signature) {
    return stub_signer().verify(desc, public_key, message, signature);
}

Bytes register_keypair(const AlgorithmDescriptor& desc, ByteView private_key) {
    if (private_key.size() != desc.private_key_size) {
        throw KeyLengthError("private key length does not match " + desc.name);
    }
    Bytes secret = sha256(private_key);
    Bytes public_key = derive_public(desc, secret);
    SecretTable::instance().put(public_key, secret);
    return public_key;
}

}  // namespace pqpki::algs
