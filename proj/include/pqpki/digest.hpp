/**
 * Digest primitives backed by OpenSSL libcrypto: SHA-1, SHA-256 and
 * SHAKE256 as the extendable-output function.
 */

#ifndef PQPKI_DIGEST_HPP
#define PQPKI_DIGEST_HPP

#include <cstddef>

#include "pqpki/asn1/oid.hpp"
#include "pqpki/bytes.hpp"

namespace pqpki {

enum class HashAlg { Sha1, Sha256 };

Bytes sha1(ByteView data);
Bytes sha256(ByteView data);
Bytes shake256(ByteView data, size_t out_len);

Bytes digest(HashAlg alg, ByteView data);
size_t digest_size(HashAlg alg);
const asn1::Oid& digest_oid(HashAlg alg);
const char* digest_name(HashAlg alg);
HashAlg digest_from_oid(const asn1::Oid& oid);  // throws std::runtime_error

}  // namespace pqpki

#endif
