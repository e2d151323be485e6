#include "pqpki/crl/crl.hpp"

#include <algorithm>

namespace pqpki::crl {

using asn1::DerValue;
using cert::Extension;
using cert::ext_oid::alt_signature_algorithm;
using cert::ext_oid::alt_signature_value;
using cert::ext_oid::crl_number;
using cert::ext_oid::crl_reason;

const char* reason_name(RevocationReason r) {
    switch (r) {
        case RevocationReason::Unspecified: return "unspecified";
        case RevocationReason::KeyCompromise: return "keyCompromise";
        case RevocationReason::CaCompromise: return "caCompromise";
        case RevocationReason::Superseded: return "superseded";
        case RevocationReason::CessationOfOperation: return "cessationOfOperation";
    }
    return "?";
}

RevocationReason reason_from_name(std::string_view name) {
    for (RevocationReason r : {RevocationReason::Unspecified, RevocationReason::KeyCompromise,
                               RevocationReason::CaCompromise, RevocationReason::Superseded,
                               RevocationReason::CessationOfOperation}) {
        if (name == reason_name(r)) return r;
    }
    throw std::invalid_argument("unknown revocation reason \"" + std::string(name) + "\"");
}

int compare_serials(ByteView a, ByteView b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// encode / decode

namespace {

DerValue extension_to_der(const Extension& ext) {
    std::vector<DerValue> fields;
    fields.push_back(DerValue::object_identifier(ext.oid));
    if (ext.critical) fields.push_back(DerValue::boolean(true));
    fields.push_back(DerValue::octet_string(ext.payload));
    return DerValue::sequence(std::move(fields));
}

Extension extension_from_der(const DerValue& der) {
    if (der.child_count() < 2 || der.child_count() > 3) {
        throw MalformedCrlError("Extension must have 2 or 3 fields");
    }
    Extension ext;
    ext.oid = der.child(0).read_oid();
    size_t value_at = 1;
    if (der.child_count() == 3) {
        ext.critical = der.child(1).read_boolean();
        value_at = 2;
    }
    ext.payload = der.child(value_at).read_octet_string();
    return ext;
}

DerValue entry_to_der(const RevokedEntry& entry) {
    Extension reason{crl_reason, false,
                     asn1::encode(DerValue::enumerated(int64_t(entry.reason)))};
    return DerValue::sequence({
        DerValue::unsigned_integer(entry.serial),
        DerValue::time(entry.revocation_time),
        DerValue::sequence({extension_to_der(reason)}),
    });
}

RevokedEntry entry_from_der(const DerValue& der) {
    if (der.child_count() < 2) {
        throw MalformedCrlError("revoked entry needs serial and time");
    }
    RevokedEntry entry;
    entry.serial = der.child(0).read_unsigned_integer();
    entry.revocation_time = der.child(1).read_time();
    if (der.child_count() >= 3) {
        for (const DerValue& e : der.child(2).children()) {
            Extension ext = extension_from_der(e);
            if (ext.oid == crl_reason) {
                entry.reason = RevocationReason(asn1::decode(ext.payload).read_enumerated());
            }
        }
    }
    return entry;
}

struct TbsParts {
    algs::AlgorithmDescriptor signature_alg;
    cert::DistinguishedName issuer;
    asn1::TimeValue this_update, next_update;
    std::vector<RevokedEntry> entries;
    std::vector<Extension> extensions;
};

Bytes encode_tbs(const TbsParts& tbs) {
    std::vector<DerValue> fields;
    fields.push_back(DerValue::integer(1));  // v2
    fields.push_back(cert::algorithm_identifier(tbs.signature_alg));
    fields.push_back(tbs.issuer.to_der());
    fields.push_back(DerValue::time(tbs.this_update));
    fields.push_back(DerValue::time(tbs.next_update));
    if (!tbs.entries.empty()) {
        std::vector<DerValue> revoked;
        revoked.reserve(tbs.entries.size());
        for (const RevokedEntry& e : tbs.entries) revoked.push_back(entry_to_der(e));
        fields.push_back(DerValue::sequence(std::move(revoked)));
    }
    std::vector<DerValue> exts;
    exts.reserve(tbs.extensions.size());
    for (const Extension& e : tbs.extensions) exts.push_back(extension_to_der(e));
    fields.push_back(DerValue::context(0, {DerValue::sequence(std::move(exts))}));
    return asn1::encode(DerValue::sequence(std::move(fields)));
}

algs::AlgorithmDescriptor read_alg(const DerValue& der,
                                   const std::function<ByteView()>& composite_sig) {
    asn1::Oid oid = der.child(0).read_oid();
    if (oid == algs::composite_oid()) {
        auto sigs = cert::decode_composite_signature(composite_sig());
        std::vector<algs::AlgorithmDescriptor> comps;
        for (auto& s : sigs) comps.push_back(s.algorithm);
        return cert::CompositeDescriptor::make(std::move(comps)).synthesized;
    }
    return cert::read_algorithm_identifier(der);
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

Bytes RevocationList::serialize() const {
    Bytes alg = asn1::encode(cert::algorithm_identifier(signature_alg));
    Bytes sig = asn1::encode(DerValue::bit_string(signature));
    return wrap_sequence_raw({tbs_der, alg, sig});
}

RevocationList RevocationList::parse(ByteView der) {
    try {
        DerValue outer = asn1::decode(der);
        if (!outer.is_universal(asn1::tag::Sequence) || outer.child_count() != 3) {
            throw MalformedCrlError("CRL must be a SEQUENCE of 3 fields");
        }
        RevocationList crl;
        crl.tbs_der = asn1::encode(outer.child(0));
        crl.signature = outer.child(2).read_bit_string_payload();

        const DerValue& tbs = outer.child(0);
        size_t n = tbs.child_count();
        if (n < 6 || n > 7) {
            throw MalformedCrlError("TBSCertList must have 6 or 7 fields");
        }
        if (tbs.child(0).read_small_integer() != 1) {
            throw MalformedCrlError("only CRL v2 is supported");
        }
        auto sig_view = [&]() -> ByteView { return crl.signature; };
        crl.signature_alg = read_alg(tbs.child(1), sig_view);
        algs::AlgorithmDescriptor outer_alg = read_alg(outer.child(1), sig_view);
        if (outer_alg.oid != crl.signature_alg.oid) {
            throw MalformedCrlError("signature algorithm mismatch between TBS and outer");
        }
        crl.issuer = cert::DistinguishedName::from_der(tbs.child(2));
        crl.this_update = tbs.child(3).read_time();
        crl.next_update = tbs.child(4).read_time();
        if (crl.this_update.epoch_seconds >= crl.next_update.epoch_seconds) {
            throw MalformedCrlError("thisUpdate must precede nextUpdate");
        }
        size_t ext_at = 5;
        if (n == 7) {
            for (const DerValue& e : tbs.child(5).children()) {
                crl.entries.push_back(entry_from_der(e));
            }
            ext_at = 6;
        }
        const DerValue& ext_wrap = tbs.child(ext_at);
        if (!ext_wrap.is_context(0) || ext_wrap.child_count() != 1) {
            throw MalformedCrlError("crlExtensions must sit in [0]");
        }
        for (const DerValue& e : ext_wrap.child(0).children()) {
            crl.extensions.push_back(extension_from_der(e));
        }
        for (size_t i = 1; i < crl.entries.size(); ++i) {
            if (compare_serials(crl.entries[i - 1].serial, crl.entries[i].serial) >= 0) {
                throw MalformedCrlError("entries must be sorted by serial without duplicates");
            }
        }
        return crl;
    } catch (const asn1::Asn1Error& e) {
        throw MalformedCrlError(e.what(), e.offset());
    } catch (const MalformedCrlError&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedCrlError(e.what());
    }
}

uint64_t RevocationList::crl_number() const {
    const Extension* ext = find_ext(cert::ext_oid::crl_number);
    if (!ext) return 0;
    return uint64_t(asn1::decode(ext->payload).read_small_integer());
}

std::optional<algs::AlgorithmDescriptor> RevocationList::alt_signature_alg() const {
    const Extension* ext = find_ext(alt_signature_algorithm);
    if (!ext) return std::nullopt;
    return cert::read_algorithm_identifier(asn1::decode(ext->payload));
}

std::optional<Bytes> RevocationList::alt_signature() const {
    const Extension* ext = find_ext(alt_signature_value);
    if (!ext) return std::nullopt;
    return asn1::decode(ext->payload).read_bit_string_payload();
}

// ---------------------------------------------------------------------------
// building

RevocationList build_crl(const CrlParams& params, std::span<const RevokedEntry> entries,
                         CrlMode mode, std::span<const algs::KeyPair> keys) {
    if (params.this_update.epoch_seconds >= params.next_update.epoch_seconds) {
        throw cert::InvalidValidityError("thisUpdate must precede nextUpdate");
    }
    for (size_t i = 1; i < entries.size(); ++i) {
        if (compare_serials(entries[i - 1].serial, entries[i].serial) >= 0) {
            throw UnsortedEntriesError("entries must be sorted ascending with no duplicates");
        }
    }
    switch (mode) {
        case CrlMode::Pure:
            if (keys.size() != 1) throw ModeKeyMismatchError("pure mode takes one key");
            break;
        case CrlMode::Hybrid:
            if (keys.size() != 2 || keys[0].algorithm.security_level != 0 ||
                keys[1].algorithm.security_level == 0) {
                throw ModeKeyMismatchError("hybrid mode takes a classical and a PQ key");
            }
            break;
        case CrlMode::Composite:
            if (keys.size() < 2) {
                throw ModeKeyMismatchError("composite mode takes at least two keys");
            }
            break;
    }

    TbsParts tbs;
    tbs.issuer = params.issuer;
    tbs.this_update = params.this_update;
    tbs.next_update = params.next_update;
    tbs.entries.assign(entries.begin(), entries.end());

    Bytes aki_source;
    if (mode == CrlMode::Composite) {
        std::vector<algs::AlgorithmDescriptor> comp_algs;
        std::vector<cert::ComponentKey> comp_keys;
        for (const auto& k : keys) {
            comp_algs.push_back(k.algorithm);
            comp_keys.push_back({k.algorithm, k.public_key});
        }
        tbs.signature_alg = cert::CompositeDescriptor::make(std::move(comp_algs)).synthesized;
        aki_source = cert::encode_composite_key(comp_keys);
    } else {
        tbs.signature_alg = keys[0].algorithm;
        aki_source = keys[0].public_key;
    }

    Bytes key_id = params.issuer_key_id.empty() ? digest(params.key_id_hash, aki_source)
                                                : params.issuer_key_id;
    tbs.extensions.push_back(cert::make_aki_from_key_id(key_id));
    tbs.extensions.push_back(Extension{
        crl_number, false, asn1::encode(DerValue::integer(int64_t(params.crl_number)))});

    if (mode == CrlMode::Hybrid) {
        tbs.extensions.push_back(Extension{
            alt_signature_algorithm, false,
            asn1::encode(cert::algorithm_identifier(keys[1].algorithm))});
        Bytes alt_sig = algs::stub_sign(keys[1].algorithm, keys[1].private_key,
                                        encode_tbs(tbs));
        tbs.extensions.push_back(Extension{alt_signature_value, false,
                                           asn1::encode(DerValue::bit_string(alt_sig))});
    }

    RevocationList crl;
    crl.signature_alg = tbs.signature_alg;
    crl.issuer = tbs.issuer;
    crl.this_update = tbs.this_update;
    crl.next_update = tbs.next_update;
    crl.entries = tbs.entries;
    crl.extensions = tbs.extensions;
    crl.tbs_der = encode_tbs(tbs);

    if (mode == CrlMode::Composite) {
        std::vector<cert::ComponentSignature> sigs;
        for (const auto& k : keys) {
            sigs.push_back({k.algorithm, algs::stub_sign(k.algorithm, k.private_key,
                                                         crl.tbs_der)});
        }
        crl.signature = cert::encode_composite_signature(sigs);
    } else {
        crl.signature = algs::stub_sign(keys[0].algorithm, keys[0].private_key, crl.tbs_der);
    }
    return crl;
}

// ---------------------------------------------------------------------------
// queries

std::optional<RevokedEntry> is_revoked(const RevocationList& crl, ByteView serial) {
    const auto& v = crl.entries;
    size_t lo = 0, hi = v.size();
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        int c = compare_serials(v[mid].serial, serial);
        if (c == 0) return v[mid];
        if (c < 0) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return std::nullopt;
}

bool verify_crl_base(const RevocationList& crl, const cert::Certificate& ca_cert) {
    if (crl.signature_alg.family == algs::Family::Composite) {
        std::vector<cert::ComponentSignature> sigs;
        std::vector<cert::ComponentKey> keys;
        try {
            sigs = cert::decode_composite_signature(crl.signature);
            keys = ca_cert.composite_keys();
        } catch (const std::exception&) {
            return false;
        }
        if (sigs.empty() || sigs.size() != keys.size()) return false;
        for (size_t i = 0; i < sigs.size(); ++i) {
            if (sigs[i].algorithm.oid != keys[i].algorithm.oid) return false;
            try {
                if (!algs::stub_verify(sigs[i].algorithm, keys[i].public_key, crl.tbs_der,
                                       sigs[i].signature)) {
                    return false;
                }
            } catch (const algs::KeyLengthError&) {
                return false;
            }
        }
        return true;
    }
    auto key = cert::find_verification_key(ca_cert, crl.signature_alg);
    if (!key) return false;
    try {
        return algs::stub_verify(crl.signature_alg, *key, crl.tbs_der, crl.signature);
    } catch (const algs::KeyLengthError&) {
        return false;
    }
}

bool verify_crl_alt(const RevocationList& crl, const cert::Certificate& ca_cert) {
    auto alg = crl.alt_signature_alg();
    auto sig = crl.alt_signature();
    if (!alg || !sig) return false;
    auto key = cert::find_verification_key(ca_cert, *alg);
    if (!key) return false;

    // reconstruct the TBS with altSignatureValue removed
    TbsParts tbs;
    tbs.signature_alg = crl.signature_alg;
    tbs.issuer = crl.issuer;
    tbs.this_update = crl.this_update;
    tbs.next_update = crl.next_update;
    tbs.entries = crl.entries;
    for (const Extension& e : crl.extensions) {
        if (e.oid != alt_signature_value) tbs.extensions.push_back(e);
    }
    try {
        return algs::stub_verify(*alg, *key, encode_tbs(tbs), *sig);
    } catch (const algs::KeyLengthError&) {
        return false;
    }
}

CrlSizeReport crl_size_report(const RevocationList& crl) {
    CrlSizeReport report;
    report.total_bytes = crl.serialize().size();
    report.signature_bytes = crl.signature.size();
    if (!crl.entries.empty()) {
        std::vector<DerValue> revoked;
        for (const RevokedEntry& e : crl.entries) revoked.push_back(entry_to_der(e));
        report.entries_bytes = asn1::encode(DerValue::sequence(std::move(revoked))).size();
    }
    report.header_bytes = report.total_bytes - report.signature_bytes - report.entries_bytes;
    return report;
}

}  // namespace pqpki::crl
