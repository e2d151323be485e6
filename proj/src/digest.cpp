#include "pqpki/digest.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace pqpki {

namespace {

using CtxPtr = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

Bytes evp_digest(const EVP_MD* md, ByteView data, size_t out_len) {
    CtxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1) {
        throw std::runtime_error("digest init/update failed");
    }
    Bytes out(out_len);
    unsigned int n = 0;
    if (EVP_MD_flags(md) & EVP_MD_FLAG_XOF) {
        if (EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
            throw std::runtime_error("XOF final failed");
        }
    } else {
        if (EVP_DigestFinal_ex(ctx.get(), out.data(), &n) != 1 || n != out_len) {
            throw std::runtime_error("digest final failed");
        }
    }
    return out;
}

}  // namespace

Bytes sha1(ByteView data) { return evp_digest(EVP_sha1(), data, 20); }

Bytes sha256(ByteView data) { return evp_digest(EVP_sha256(), data, 32); }

Bytes shake256(ByteView data, size_t out_len) {
    if (out_len == 0) return {};
    return evp_digest(EVP_shake256(), data, out_len);
}

Bytes digest(HashAlg alg, ByteView data) {
    return alg == HashAlg::Sha1 ? sha1(data) : sha256(data);
}

size_t digest_size(HashAlg alg) { return alg == HashAlg::Sha1 ? 20 : 32; }

const asn1::Oid& digest_oid(HashAlg alg) {
    static const asn1::Oid kSha1{1, 3, 14, 3, 2, 26};
    static const asn1::Oid kSha256{2, 16, 840, 1, 101, 3, 4, 2, 1};
    return alg == HashAlg::Sha1 ? kSha1 : kSha256;
}

const char* digest_name(HashAlg alg) { return alg == HashAlg::Sha1 ? "sha1" : "sha256"; }

HashAlg digest_from_oid(const asn1::Oid& oid) {
    if (oid == digest_oid(HashAlg::Sha1)) return HashAlg::Sha1;
    if (oid == digest_oid(HashAlg::Sha256)) return HashAlg::Sha256;
    throw std::runtime_error("unsupported digest OID " + oid.to_string());
}

}  // namespace pqpki
