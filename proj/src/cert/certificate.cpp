#include "pqpki/cert/certificate.hpp"

#include <algorithm>
#include <set>

namespace pqpki::cert {

using asn1::Asn1Error;
using asn1::DerValue;

const char* format_name(CertFormat f) {
    switch (f) {
        case CertFormat::Pure: return "pure";
        case CertFormat::Hybrid: return "hybrid";
        case CertFormat::Composite: return "composite";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// AlgorithmIdentifier

asn1::DerValue algorithm_identifier(const algs::AlgorithmDescriptor& desc) {
    return DerValue::sequence({DerValue::object_identifier(desc.oid)});
}

namespace {

// Marker for composite containers inside a TBS; Certificate::parse replaces
// it with a descriptor synthesized from the actual components.
algs::AlgorithmDescriptor composite_marker() {
    return {"composite", algs::composite_oid(), 1, 1, 1, 0, algs::Family::Composite, {}};
}

}  // namespace

const algs::AlgorithmDescriptor& read_algorithm_identifier(const asn1::DerValue& der) {
    if (!der.is_universal(asn1::tag::Sequence) || der.child_count() < 1) {
        throw MalformedCertificateError("AlgorithmIdentifier must be a SEQUENCE");
    }
    asn1::Oid oid = der.child(0).read_oid();
    const algs::AlgorithmDescriptor* d = algs::Registry::instance().find_oid(oid);
    if (!d) throw algs::UnknownAlgorithmError(oid.to_string());
    return *d;
}

namespace {

algs::AlgorithmDescriptor read_alg_or_composite(const asn1::DerValue& der) {
    if (!der.is_universal(asn1::tag::Sequence) || der.child_count() < 1) {
        throw MalformedCertificateError("AlgorithmIdentifier must be a SEQUENCE");
    }
    asn1::Oid oid = der.child(0).read_oid();
    if (oid == algs::composite_oid()) return composite_marker();
    const algs::AlgorithmDescriptor* d = algs::Registry::instance().find_oid(oid);
    if (!d) throw algs::UnknownAlgorithmError(oid.to_string());
    return *d;
}

Bytes wrap_sequence_raw(std::initializer_list<ByteView> parts) {
    size_t body_len = 0;
    for (ByteView p : parts) body_len += p.size();
    Bytes out;
    out.push_back(0x30);
    if (body_len < 128) {
        out.push_back(uint8_t(body_len));
    } else {
        Bytes octets;
        size_t n = body_len;
        while (n > 0) {
            octets.push_back(uint8_t(n & 0xFF));
            n >>= 8;
        }
        out.push_back(uint8_t(0x80 | octets.size()));
        out.insert(out.end(), octets.rbegin(), octets.rend());
    }
    for (ByteView p : parts) append(out, p);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// composite containers

CompositeDescriptor CompositeDescriptor::make(
    std::vector<algs::AlgorithmDescriptor> components) {
    if (components.size() < 2) {
        throw ComponentCountError("composite needs at least 2 components, got " +
                                  std::to_string(components.size()));
    }
    std::string name = "composite(";
    size_t private_sum = 0;
    int level = components.front().security_level;
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i].family == algs::Family::Composite) {
            throw NestedCompositeError("composite components must not be composite");
        }
        if (i) name += '+';
        name += components[i].name;
        private_sum += components[i].private_key_size;
        level = std::min(level, components[i].security_level);
    }
    name += ')';

    // Synthesized sizes come from actually encoding zero-filled components,
    // so they include the exact DER structure overhead.
    std::vector<ComponentKey> dummy_keys;
    std::vector<ComponentSignature> dummy_sigs;
    for (const auto& c : components) {
        dummy_keys.push_back({c, Bytes(c.public_key_size, 0)});
        dummy_sigs.push_back({c, Bytes(c.signature_size, 0)});
    }

    CompositeDescriptor out;
    out.synthesized = algs::AlgorithmDescriptor{
        std::move(name),
        algs::composite_oid(),
        encode_composite_key(dummy_keys).size(),
        private_sum,
        encode_composite_signature(dummy_sigs).size(),
        level,
        algs::Family::Composite,
        {},
    };
    out.components = std::move(components);
    return out;
}

Bytes encode_composite_key(std::span<const ComponentKey> components) {
    std::vector<DerValue> pairs;
    pairs.reserve(components.size());
    for (const auto& c : components) {
        pairs.push_back(DerValue::sequence(
            {algorithm_identifier(c.algorithm), DerValue::bit_string(c.public_key)}));
    }
    return asn1::encode(DerValue::sequence(std::move(pairs)));
}

std::vector<ComponentKey> decode_composite_key(ByteView blob) {
    DerValue seq = asn1::decode(blob);
    std::vector<ComponentKey> out;
    for (const DerValue& pair : seq.children()) {
        if (pair.child_count() != 2) {
            throw MalformedCertificateError("composite key pair must have 2 elements");
        }
        out.push_back({read_algorithm_identifier(pair.child(0)),
                       pair.child(1).read_bit_string_payload()});
    }
    return out;
}

Bytes encode_composite_signature(std::span<const ComponentSignature> components) {
    std::vector<DerValue> pairs;
    pairs.reserve(components.size());
    for (const auto& c : components) {
        pairs.push_back(DerValue::sequence(
            {algorithm_identifier(c.algorithm), DerValue::bit_string(c.signature)}));
    }
    return asn1::encode(DerValue::sequence(std::move(pairs)));
}

std::vector<ComponentSignature> decode_composite_signature(ByteView blob) {
    DerValue seq = asn1::decode(blob);
    std::vector<ComponentSignature> out;
    for (const DerValue& pair : seq.children()) {
        if (pair.child_count() != 2) {
            throw MalformedCertificateError("composite signature pair must have 2 elements");
        }
        out.push_back({read_algorithm_identifier(pair.child(0)),
                       pair.child(1).read_bit_string_payload()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// TBS encode / decode

namespace {

DerValue extension_to_der(const Extension& ext) {
    std::vector<DerValue> fields;
    fields.push_back(DerValue::object_identifier(ext.oid));
    if (ext.critical) fields.push_back(DerValue::boolean(true));
    fields.push_back(DerValue::octet_string(ext.payload));
    return DerValue::sequence(std::move(fields));
}

Extension extension_from_der(const DerValue& der) {
    if (!der.is_universal(asn1::tag::Sequence) || der.child_count() < 2 ||
        der.child_count() > 3) {
        throw MalformedCertificateError("Extension must have 2 or 3 fields");
    }
    Extension ext;
    ext.oid = der.child(0).read_oid();
    size_t value_at = 1;
    if (der.child_count() == 3) {
        ext.critical = der.child(1).read_boolean();
        if (!ext.critical) {
            throw MalformedCertificateError("critical FALSE must be omitted in DER");
        }
        value_at = 2;
    }
    ext.payload = der.child(value_at).read_octet_string();
    asn1::decode(ext.payload);  // payload must itself be valid DER
    return ext;
}

DerValue spki_to_der(const algs::AlgorithmDescriptor& alg, const Bytes& key) {
    return DerValue::sequence({algorithm_identifier(alg), DerValue::bit_string(key)});
}

}  // namespace

asn1::DerValue TbsCertificate::to_der() const {
    std::vector<DerValue> fields;
    fields.push_back(DerValue::context(0, {DerValue::integer(2)}));  // v3
    fields.push_back(DerValue::unsigned_integer(serial));
    fields.push_back(algorithm_identifier(signature_alg));
    fields.push_back(issuer.to_der());
    fields.push_back(DerValue::sequence(
        {DerValue::time(validity.not_before), DerValue::time(validity.not_after)}));
    fields.push_back(subject.to_der());
    fields.push_back(spki_to_der(spki_alg, spki_key));
    std::vector<DerValue> exts;
    exts.reserve(extensions.size());
    for (const Extension& e : extensions) exts.push_back(extension_to_der(e));
    fields.push_back(DerValue::context(3, {DerValue::sequence(std::move(exts))}));
    return DerValue::sequence(std::move(fields));
}

TbsCertificate TbsCertificate::from_der(const asn1::DerValue& der) {
    if (!der.is_universal(asn1::tag::Sequence) || der.child_count() != 8) {
        throw MalformedCertificateError("TBS must be a SEQUENCE of 8 fields");
    }
    TbsCertificate tbs;
    const DerValue& version = der.child(0);
    if (!version.is_context(0) || version.child_count() != 1 ||
        version.child(0).read_small_integer() != 2) {
        throw MalformedCertificateError("only X.509 v3 is supported");
    }
    tbs.serial = der.child(1).read_unsigned_integer();
    if (tbs.serial.empty() || (tbs.serial.size() == 1 && tbs.serial[0] == 0)) {
        throw MalformedCertificateError("serial must be positive");
    }
    tbs.signature_alg = read_alg_or_composite(der.child(2));
    tbs.issuer = DistinguishedName::from_der(der.child(3));
    const DerValue& window = der.child(4);
    if (window.child_count() != 2) {
        throw MalformedCertificateError("validity must hold two times");
    }
    tbs.validity = {window.child(0).read_time(), window.child(1).read_time()};
    if (tbs.validity.not_before.epoch_seconds >= tbs.validity.not_after.epoch_seconds) {
        throw MalformedCertificateError("notBefore must precede notAfter");
    }
    tbs.subject = DistinguishedName::from_der(der.child(5));
    const DerValue& spki = der.child(6);
    if (spki.child_count() != 2) {
        throw MalformedCertificateError("SubjectPublicKeyInfo must have 2 fields");
    }
    tbs.spki_alg = read_alg_or_composite(spki.child(0));
    tbs.spki_key = spki.child(1).read_bit_string_payload();
    const DerValue& ext_wrap = der.child(7);
    if (!ext_wrap.is_context(3) || ext_wrap.child_count() != 1) {
        throw MalformedCertificateError("extensions must sit in [3]");
    }
    std::set<asn1::Oid> seen;
    for (const DerValue& e : ext_wrap.child(0).children()) {
        Extension ext = extension_from_der(e);
        if (!seen.insert(ext.oid).second) {
            throw MalformedCertificateError("duplicate extension " + ext.oid.to_string());
        }
        tbs.extensions.push_back(std::move(ext));
    }
    return tbs;
}

// ---------------------------------------------------------------------------
// Certificate

Bytes Certificate::serialize() const {
    Bytes alg = asn1::encode(algorithm_identifier(tbs.signature_alg));
    Bytes sig = asn1::encode(DerValue::bit_string(signature));
    return wrap_sequence_raw({tbs_der, alg, sig});
}

Certificate Certificate::parse(ByteView der) {
    try {
        DerValue outer = asn1::decode(der);
        if (!outer.is_universal(asn1::tag::Sequence) || outer.child_count() != 3) {
            throw MalformedCertificateError("certificate must be a SEQUENCE of 3 fields");
        }
        Certificate cert;
        cert.tbs_der = asn1::encode(outer.child(0));
        cert.tbs = TbsCertificate::from_der(outer.child(0));
        algs::AlgorithmDescriptor outer_alg = read_alg_or_composite(outer.child(1));
        cert.signature = outer.child(2).read_bit_string_payload();

        if (outer_alg.oid != cert.tbs.signature_alg.oid) {
            throw MalformedCertificateError(
                "outer signature algorithm differs from the TBS signature field");
        }

        // replace composite markers with descriptors synthesized from the
        // actual components
        if (cert.tbs.spki_alg.family == algs::Family::Composite) {
            auto keys = decode_composite_key(cert.tbs.spki_key);
            std::vector<algs::AlgorithmDescriptor> comp_algs;
            for (auto& k : keys) comp_algs.push_back(k.algorithm);
            cert.tbs.spki_alg = CompositeDescriptor::make(std::move(comp_algs)).synthesized;
        }
        if (cert.tbs.signature_alg.family == algs::Family::Composite) {
            auto sigs = decode_composite_signature(cert.signature);
            std::vector<algs::AlgorithmDescriptor> comp_algs;
            for (auto& s : sigs) comp_algs.push_back(s.algorithm);
            cert.tbs.signature_alg =
                CompositeDescriptor::make(std::move(comp_algs)).synthesized;
        }

        bool composite = cert.tbs.spki_alg.family == algs::Family::Composite ||
                         cert.tbs.signature_alg.family == algs::Family::Composite;
        bool alt_triple = cert.find_ext(ext_oid::subject_alt_public_key_info) &&
                          cert.find_ext(ext_oid::alt_signature_algorithm) &&
                          cert.find_ext(ext_oid::alt_signature_value);
        cert.format = composite  ? CertFormat::Composite
                      : alt_triple ? CertFormat::Hybrid
                                   : CertFormat::Pure;
        return cert;
    } catch (const Asn1Error& e) {
        throw MalformedCertificateError(e.what(), e.offset());
    } catch (const MalformedCertificateError&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedCertificateError(e.what());
    }
}

std::optional<ComponentKey> Certificate::alt_public_key() const {
    const Extension* ext = find_ext(ext_oid::subject_alt_public_key_info);
    if (!ext) return std::nullopt;
    DerValue spki = ext->payload_der();
    if (spki.child_count() != 2) {
        throw MalformedCertificateError("alt SPKI must have 2 fields");
    }
    return ComponentKey{read_algorithm_identifier(spki.child(0)),
                        spki.child(1).read_bit_string_payload()};
}

std::optional<algs::AlgorithmDescriptor> Certificate::alt_signature_alg() const {
    const Extension* ext = find_ext(ext_oid::alt_signature_algorithm);
    if (!ext) return std::nullopt;
    return read_algorithm_identifier(ext->payload_der());
}

std::optional<Bytes> Certificate::alt_signature() const {
    const Extension* ext = find_ext(ext_oid::alt_signature_value);
    if (!ext) return std::nullopt;
    return ext->payload_der().read_bit_string_payload();
}

std::vector<ComponentKey> Certificate::composite_keys() const {
    return decode_composite_key(tbs.spki_key);
}

std::vector<ComponentSignature> Certificate::composite_signatures() const {
    return decode_composite_signature(signature);
}

Bytes Certificate::key_id() const {
    if (const Extension* ski = find_ext(ext_oid::subject_key_id)) {
        return read_key_id(*ski);
    }
    return sha1(tbs.spki_key);
}

// ---------------------------------------------------------------------------
// builders

namespace {

void check_validity(const Validity& v) {
    if (v.not_before.epoch_seconds >= v.not_after.epoch_seconds) {
        throw InvalidValidityError("notBefore must precede notAfter");
    }
}

void check_serial(const Bytes& serial) {
    bool nonzero = false;
    for (uint8_t b : serial) nonzero |= b != 0;
    if (!nonzero) throw MalformedCertificateError("serial must be positive");
}

std::vector<Extension> standard_extensions(const IssueParams& params,
                                           ByteView subject_key_bytes,
                                           ByteView issuer_key_source) {
    Bytes key_id = params.issuer_key_id.empty()
                       ? digest(params.key_id_hash, issuer_key_source)
                       : params.issuer_key_id;
    std::vector<Extension> exts;
    exts.push_back(make_ski(subject_key_bytes, params.key_id_hash));
    exts.push_back(make_aki_from_key_id(key_id));
    if (params.profile == Profile::CaCert) {
        exts.push_back(make_key_usage({.key_cert_sign = true, .crl_sign = true}, true));
        exts.push_back(make_basic_constraints(true, true));
    } else {
        exts.push_back(make_key_usage({.digital_signature = true}, false));
        exts.push_back(make_basic_constraints(false, false));
        if (params.profile == Profile::OcspResponder) {
            exts.push_back(make_extended_key_usage({asn1::Oid{1, 3, 6, 1, 5, 5, 7, 3, 9}}));
        }
    }
    return exts;
}

Certificate finish(TbsCertificate tbs, const algs::KeyPair& issuer_key, CertFormat format) {
    Certificate cert;
    cert.tbs = std::move(tbs);
    cert.tbs_der = cert.tbs.encode();
    cert.signature =
        algs::stub_sign(issuer_key.algorithm, issuer_key.private_key, cert.tbs_der);
    cert.format = format;
    return cert;
}

}  // namespace

Certificate build_pure(const IssueParams& params, const algs::AlgorithmDescriptor& subject_alg,
                       ByteView subject_public_key, const algs::KeyPair& issuer_key) {
    check_validity(params.validity);
    check_serial(params.serial);

    TbsCertificate tbs;
    tbs.serial = params.serial;
    tbs.signature_alg = issuer_key.algorithm;
    tbs.issuer = params.issuer;
    tbs.validity = params.validity;
    tbs.subject = params.subject;
    tbs.spki_alg = subject_alg;
    tbs.spki_key = to_bytes(subject_public_key);
    tbs.extensions = standard_extensions(params, subject_public_key, issuer_key.public_key);
    return finish(std::move(tbs), issuer_key, CertFormat::Pure);
}

Certificate build_hybrid(const IssueParams& params,
                         const algs::AlgorithmDescriptor& subject_base_alg,
                         ByteView subject_base_key,
                         const algs::AlgorithmDescriptor& subject_alt_alg,
                         ByteView subject_alt_key, const algs::KeyPair& issuer_base_key,
                         const algs::KeyPair& issuer_alt_key) {
    check_validity(params.validity);
    check_serial(params.serial);
    if (subject_base_alg.security_level != 0 ||
        issuer_base_key.algorithm.security_level != 0) {
        throw MixedRoleError("hybrid base slot requires a classical algorithm");
    }
    if (subject_alt_alg.security_level == 0 || issuer_alt_key.algorithm.security_level == 0) {
        throw MixedRoleError("hybrid alt slot requires a PQ algorithm");
    }

    TbsCertificate tbs;
    tbs.serial = params.serial;
    tbs.signature_alg = issuer_base_key.algorithm;
    tbs.issuer = params.issuer;
    tbs.validity = params.validity;
    tbs.subject = params.subject;
    tbs.spki_alg = subject_base_alg;
    tbs.spki_key = to_bytes(subject_base_key);
    tbs.extensions = standard_extensions(params, subject_base_key, issuer_base_key.public_key);

    tbs.extensions.push_back(
        Extension{ext_oid::subject_alt_public_key_info, params.mark_alt_critical,
                  asn1::encode(spki_to_der(subject_alt_alg, to_bytes(subject_alt_key)))});
    tbs.extensions.push_back(
        Extension{ext_oid::alt_signature_algorithm, params.mark_alt_critical,
                  asn1::encode(algorithm_identifier(issuer_alt_key.algorithm))});

    // alt signature covers the TBS as it stands here: alt key and alt
    // algorithm included, altSignatureValue still absent
    Bytes alt_sig = algs::stub_sign(issuer_alt_key.algorithm, issuer_alt_key.private_key,
                                    tbs.encode());
    tbs.extensions.push_back(Extension{ext_oid::alt_signature_value, params.mark_alt_critical,
                                       asn1::encode(DerValue::bit_string(alt_sig))});

    return finish(std::move(tbs), issuer_base_key, CertFormat::Hybrid);
}

Certificate build_composite(const IssueParams& params,
                            std::span<const ComponentKey> subject_components,
                            std::span<const algs::KeyPair> issuer_components) {
    check_validity(params.validity);
    check_serial(params.serial);

    std::vector<algs::AlgorithmDescriptor> subject_algs, issuer_algs;
    for (const auto& c : subject_components) subject_algs.push_back(c.algorithm);
    for (const auto& k : issuer_components) issuer_algs.push_back(k.algorithm);
    CompositeDescriptor subject_desc = CompositeDescriptor::make(std::move(subject_algs));
    CompositeDescriptor issuer_desc = CompositeDescriptor::make(std::move(issuer_algs));

    TbsCertificate tbs;
    tbs.serial = params.serial;
    tbs.signature_alg = issuer_desc.synthesized;
    tbs.issuer = params.issuer;
    tbs.validity = params.validity;
    tbs.subject = params.subject;
    tbs.spki_alg = subject_desc.synthesized;
    tbs.spki_key = encode_composite_key(subject_components);

    // key identifiers hash the whole composite key blob
    Bytes issuer_blob;
    {
        std::vector<ComponentKey> issuer_keys;
        for (const auto& k : issuer_components) {
            issuer_keys.push_back({k.algorithm, k.public_key});
        }
        issuer_blob = encode_composite_key(issuer_keys);
    }
    tbs.extensions = standard_extensions(params, tbs.spki_key, issuer_blob);

    Certificate cert;
    cert.tbs = std::move(tbs);
    cert.tbs_der = cert.tbs.encode();
    std::vector<ComponentSignature> sigs;
    for (const auto& k : issuer_components) {
        sigs.push_back({k.algorithm, algs::stub_sign(k.algorithm, k.private_key, cert.tbs_der)});
    }
    cert.signature = encode_composite_signature(sigs);
    cert.format = CertFormat::Composite;
    return cert;
}

std::vector<ParallelChain> make_parallel_chains(
    const DistinguishedName& subject, std::span<const algs::AlgorithmDescriptor> algorithms,
    std::span<const ChainIssuer> issuers, const Validity& validity,
    const std::function<Bytes()>& next_serial, ByteView seed) {
    if (algorithms.size() < 2) {
        throw ComponentCountError("parallel chains need at least 2 algorithms");
    }
    if (issuers.size() != algorithms.size()) {
        throw std::invalid_argument("one issuer required per algorithm");
    }
    std::set<std::string> names;
    for (const auto& a : algorithms) {
        if (!names.insert(a.name).second) {
            throw DuplicateAlgorithmError("algorithm repeated across chains: " + a.name);
        }
    }

    std::vector<ParallelChain> out;
    for (size_t i = 0; i < algorithms.size(); ++i) {
        Bytes chain_seed = to_bytes(seed);
        chain_seed.push_back(uint8_t(i));
        algs::KeyPair leaf_key = algs::stub_keygen(algorithms[i], chain_seed);

        const Certificate& ca_cert = issuers[i].chain.front();
        IssueParams params;
        params.serial = next_serial();
        params.subject = subject;
        params.issuer = ca_cert.tbs.subject;
        params.validity = validity;
        params.profile = Profile::EndEntity;
        params.issuer_key_id = ca_cert.key_id();

        Certificate leaf =
            build_pure(params, algorithms[i], leaf_key.public_key, issuers[i].key);
        ParallelChain pc;
        pc.chain.push_back(std::move(leaf));
        pc.chain.insert(pc.chain.end(), issuers[i].chain.begin(), issuers[i].chain.end());
        pc.leaf_key = std::move(leaf_key);
        out.push_back(std::move(pc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// verification helpers

std::optional<Bytes> find_verification_key(const Certificate& holder,
                                           const algs::AlgorithmDescriptor& alg) {
    if (holder.tbs.spki_alg.family != algs::Family::Composite &&
        holder.tbs.spki_alg.oid == alg.oid) {
        return holder.tbs.spki_key;
    }
    if (auto alt = holder.alt_public_key(); alt && alt->algorithm.oid == alg.oid) {
        return alt->public_key;
    }
    if (holder.tbs.spki_alg.family == algs::Family::Composite) {
        for (const auto& c : holder.composite_keys()) {
            if (c.algorithm.oid == alg.oid) return c.public_key;
        }
    }
    return std::nullopt;
}

bool verify_base_signature(const Certificate& subject, const Certificate& issuer_cert) {
    const algs::AlgorithmDescriptor& alg = subject.signature_alg();
    if (alg.family == algs::Family::Composite) {
        return verify_composite_signature(subject, issuer_cert).all_ok;
    }
    std::optional<Bytes> key = find_verification_key(issuer_cert, alg);
    if (!key) return false;
    try {
        return algs::stub_verify(alg, *key, subject.tbs_der, subject.signature);
    } catch (const algs::KeyLengthError&) {
        return false;
    }
}

Bytes alt_tbs_bytes(const TbsCertificate& tbs) {
    TbsCertificate stripped = tbs;
    std::erase_if(stripped.extensions, [](const Extension& e) {
        return e.oid == ext_oid::alt_signature_value;
    });
    return stripped.encode();
}

bool verify_alt_signature(const Certificate& subject, const Certificate& issuer_cert) {
    auto alg = subject.alt_signature_alg();
    auto sig = subject.alt_signature();
    if (!alg || !sig) return false;
    std::optional<Bytes> key = find_verification_key(issuer_cert, *alg);
    if (!key) return false;
    try {
        return algs::stub_verify(*alg, *key, alt_tbs_bytes(subject.tbs), *sig);
    } catch (const algs::KeyLengthError&) {
        return false;
    }
}

CompositeCheck verify_composite_signature(const Certificate& subject,
                                          const Certificate& issuer_cert) {
    CompositeCheck check;
    std::vector<ComponentSignature> sigs;
    std::vector<ComponentKey> keys;
    try {
        sigs = subject.composite_signatures();
        keys = issuer_cert.composite_keys();
    } catch (const std::exception&) {
        return check;  // not composite material
    }
    if (sigs.empty() || sigs.size() != keys.size()) return check;

    check.all_ok = true;
    for (size_t i = 0; i < sigs.size(); ++i) {
        bool ok = sigs[i].algorithm.oid == keys[i].algorithm.oid;
        if (ok) {
            try {
                ok = algs::stub_verify(sigs[i].algorithm, keys[i].public_key,
                                       subject.tbs_der, sigs[i].signature);
            } catch (const algs::KeyLengthError&) {
                ok = false;
            }
        }
        check.component_ok.push_back(ok);
        check.all_ok = check.all_ok && ok;
    }
    return check;
}

}  // namespace pqpki::cert
