#include <doctest.h>

#include <random>

#include "pqpki/cert/certificate.hpp"

using namespace pqpki;
using namespace pqpki::cert;
using algs::KeyPair;
using algs::Registry;

namespace {

Bytes seed_of(uint64_t n) {
    Bytes s(8);
    for (int i = 0; i < 8; ++i) s[i] = uint8_t(n >> (8 * i));
    return s;
}

Validity days(int n, int start_year = 2026) {
    asn1::TimeValue from = asn1::TimeValue::utc(start_year, 1, 1, 0, 0, 0,
                                                asn1::TimeEncoding::UtcTime);
    return {from, from.plus_days(n)};
}

Bytes serial_of(uint64_t n) {
    Bytes s(16, 0);
    s[0] = 0x01;
    for (int i = 0; i < 8; ++i) s[15 - i] = uint8_t(n >> (8 * i));
    return s;
}

IssueParams params_for(uint64_t serial, const char* subject_cn, const char* issuer_cn,
                       Profile profile = Profile::EndEntity) {
    IssueParams p;
    p.serial = serial_of(serial);
    p.subject = DistinguishedName().cn(subject_cn).o("Test PKI");
    p.issuer = DistinguishedName().cn(issuer_cn).o("Test PKI");
    p.validity = days(90);
    p.profile = profile;
    return p;
}

Certificate self_signed(const KeyPair& key, const char* cn, uint64_t serial = 1) {
    IssueParams p = params_for(serial, cn, cn, Profile::CaCert);
    p.validity = days(3650);
    return build_pure(p, key.algorithm, key.public_key, key);
}

}  // namespace

TEST_CASE("pure certificate carries exact key and signature sizes") {
    const Registry& reg = Registry::instance();

    struct Expect {
        const char* alg;
        size_t key, sig;
    };
    // golden values from the registry size table
    for (const Expect& e : std::initializer_list<Expect>{
             {"dilithium-2", 1312, 2420},
             {"falcon-1024", 1793, 1280},
             {"slh-dsa-256-fast", 64, 49856},
         }) {
        const auto& alg = reg.lookup(e.alg);
        KeyPair key = algs::stub_keygen(alg, seed_of(1));
        Certificate cert = self_signed(key, "Pure Root");
        CAPTURE(e.alg);
        CHECK(cert.tbs.spki_key.size() == e.key);
        CHECK(cert.signature.size() == e.sig);
        CHECK(cert.format == CertFormat::Pure);

        // self-signed: verifies with its own embedded key
        CHECK(verify_base_signature(cert, cert));
    }
}

TEST_CASE("pure certificate round trips through DER") {
    const auto& alg = Registry::instance().lookup("falcon-512");
    KeyPair ca_key = algs::stub_keygen(alg, seed_of(2));
    Certificate ca = self_signed(ca_key, "Falcon Root");

    Bytes wire = ca.serialize();
    Certificate back = Certificate::parse(wire);
    CHECK(back == ca);
    CHECK(back.tbs.subject.to_string() == "CN=Falcon Root,O=Test PKI");
    CHECK(back.tbs_der == ca.tbs_der);
    CHECK(back.format == CertFormat::Pure);

    SUBCASE("truncated input is malformed") {
        Bytes cut(wire.begin(), wire.begin() + wire.size() / 2);
        CHECK_THROWS_AS(Certificate::parse(cut), MalformedCertificateError);
    }
    SUBCASE("trailing bytes are malformed") {
        Bytes junk = wire;
        junk.push_back(0);
        CHECK_THROWS_AS(Certificate::parse(junk), MalformedCertificateError);
    }
}

TEST_CASE("pure signature content length matches the descriptor for all PQ algorithms") {
    for (const auto& desc : Registry::instance().pq_descriptors()) {
        KeyPair key = algs::stub_keygen(desc, seed_of(desc.signature_size));
        Certificate cert = self_signed(key, "Size Probe");
        CAPTURE(desc.name);
        CHECK(cert.signature.size() == desc.signature_size);
        CHECK(cert.tbs.spki_key.size() == desc.public_key_size);
        // size accounting identity: reported size == serialized size
        CHECK(cert.serialize().size() == Certificate::parse(cert.serialize()).serialize().size());
    }
}

TEST_CASE("hybrid certificate structure") {
    const Registry& reg = Registry::instance();
    const auto& rsa = reg.lookup("rsa2048-stub");
    const auto& falcon = reg.lookup("falcon-512");

    KeyPair ca_base = algs::stub_keygen(rsa, seed_of(10));
    KeyPair ca_alt = algs::stub_keygen(falcon, seed_of(11));
    KeyPair subj_base = algs::stub_keygen(rsa, seed_of(12));
    KeyPair subj_alt = algs::stub_keygen(falcon, seed_of(13));

    IssueParams root_params = params_for(1, "Hybrid Root", "Hybrid Root", Profile::CaCert);
    Certificate root = build_hybrid(root_params, rsa, ca_base.public_key, falcon,
                                    ca_alt.public_key, ca_base, ca_alt);

    IssueParams leaf_params = params_for(2, "leaf.example", "Hybrid Root");
    leaf_params.issuer_key_id = root.key_id();
    Certificate leaf = build_hybrid(leaf_params, rsa, subj_base.public_key, falcon,
                                    subj_alt.public_key, ca_base, ca_alt);

    CHECK(leaf.format == CertFormat::Hybrid);
    CHECK(leaf.signature.size() == 256);  // classical base signature

    SUBCASE("alt extensions present and non-critical") {
        for (const auto& oid : {ext_oid::subject_alt_public_key_info,
                                ext_oid::alt_signature_algorithm,
                                ext_oid::alt_signature_value}) {
            const Extension* ext = leaf.find_ext(oid);
            REQUIRE(ext != nullptr);
            CHECK_FALSE(ext->critical);
        }
    }

    SUBCASE("alt signature value has the PQ size") {
        CHECK(leaf.alt_signature()->size() == 666);
        CHECK(leaf.alt_signature_alg()->name == "falcon-512");
        CHECK(leaf.alt_public_key()->public_key.size() == 897);
    }

    SUBCASE("both signatures verify against the issuer") {
        CHECK(verify_base_signature(leaf, root));
        CHECK(verify_alt_signature(leaf, root));
    }

    SUBCASE("round trip preserves format") {
        Certificate back = Certificate::parse(leaf.serialize());
        CHECK(back == leaf);
        CHECK(back.format == CertFormat::Hybrid);
        CHECK(verify_base_signature(back, root));
        CHECK(verify_alt_signature(back, root));
    }

    SUBCASE("alt signature corruption is detected") {
        Certificate copy = leaf;
        // rebuild with a corrupted alt signature value
        for (auto& ext : copy.tbs.extensions) {
            if (ext.oid == ext_oid::alt_signature_value) {
                ext.payload[ext.payload.size() / 2] ^= 0x01;
            }
        }
        copy.tbs_der = copy.tbs.encode();
        CHECK_FALSE(verify_alt_signature(copy, root));
    }

    SUBCASE("PQ key in the base slot is rejected") {
        CHECK_THROWS_AS(build_hybrid(leaf_params, falcon, subj_alt.public_key, falcon,
                                     subj_alt.public_key, ca_alt, ca_alt),
                        MixedRoleError);
        CHECK_THROWS_AS(build_hybrid(leaf_params, rsa, subj_base.public_key, rsa,
                                     subj_base.public_key, ca_base, ca_base),
                        MixedRoleError);
    }

    SUBCASE("mark_alt_critical emulation flag") {
        IssueParams marked = leaf_params;
        marked.mark_alt_critical = true;
        Certificate bad = build_hybrid(marked, rsa, subj_base.public_key, falcon,
                                       subj_alt.public_key, ca_base, ca_alt);
        CHECK(bad.find_ext(ext_oid::alt_signature_value)->critical);
        CHECK(verify_base_signature(bad, root));  // still a valid signature
    }
}

TEST_CASE("composite certificate structure") {
    const Registry& reg = Registry::instance();
    const auto& rsa = reg.lookup("rsa2048-stub");
    const auto& dil2 = reg.lookup("dilithium-2");

    KeyPair ca_rsa = algs::stub_keygen(rsa, seed_of(20));
    KeyPair ca_dil = algs::stub_keygen(dil2, seed_of(21));
    std::vector<KeyPair> ca_keys{ca_rsa, ca_dil};
    std::vector<ComponentKey> ca_pub{{rsa, ca_rsa.public_key}, {dil2, ca_dil.public_key}};

    IssueParams root_params = params_for(1, "Composite Root", "Composite Root", Profile::CaCert);
    Certificate root = build_composite(root_params, ca_pub, ca_keys);
    CHECK(root.format == CertFormat::Composite);

    SUBCASE("signature content is the component sum plus DER overhead") {
        // oracle: encode the component sequence independently and measure
        std::vector<ComponentSignature> dummy{{rsa, Bytes(256, 0)}, {dil2, Bytes(2420, 0)}};
        size_t expected = encode_composite_signature(dummy).size();
        CHECK(root.signature.size() == expected);

        size_t raw = 0;
        for (const auto& s : root.composite_signatures()) raw += s.signature.size();
        CHECK(raw == 2676);  // 256 + 2420
        CHECK(expected > raw);
        CHECK(expected < raw + 64);  // structure overhead stays small
    }

    SUBCASE("all components verify; corrupting any one fails the whole") {
        auto check = verify_composite_signature(root, root);
        CHECK(check.all_ok);
        REQUIRE(check.component_ok.size() == 2);

        for (size_t victim = 0; victim < 2; ++victim) {
            auto sigs = root.composite_signatures();
            sigs[victim].signature[0] ^= 0x01;
            Certificate bad = root;
            bad.signature = encode_composite_signature(sigs);
            auto bad_check = verify_composite_signature(bad, root);
            CHECK_FALSE(bad_check.all_ok);
            CHECK(bad_check.component_ok[victim] == false);
            CHECK(bad_check.component_ok[1 - victim] == true);
        }
    }

    SUBCASE("identical component keys give identical component signatures") {
        const auto& falcon = reg.lookup("falcon-512");
        KeyPair f = algs::stub_keygen(falcon, seed_of(30));
        // same key twice: determinism makes both component signatures equal.
        // distinct registered algorithms are still required across chains, but
        // composites may repeat an algorithm.
        std::vector<KeyPair> keys{f, f};
        std::vector<ComponentKey> pubs{{falcon, f.public_key}, {falcon, f.public_key}};
        Certificate twin = build_composite(root_params, pubs, keys);
        auto sigs = twin.composite_signatures();
        REQUIRE(sigs.size() == 2);
        CHECK(sigs[0].signature == sigs[1].signature);
    }

    SUBCASE("round trip classifies composite") {
        Certificate back = Certificate::parse(root.serialize());
        CHECK(back == root);
        CHECK(back.format == CertFormat::Composite);
        CHECK(back.tbs.signature_alg.family == algs::Family::Composite);
        CHECK(back.tbs.signature_alg.name == "composite(rsa2048-stub+dilithium-2)");
        CHECK(verify_composite_signature(back, root).all_ok);
    }

    SUBCASE("component count and nesting rules") {
        std::vector<ComponentKey> one{{rsa, ca_rsa.public_key}};
        std::vector<KeyPair> one_key{ca_rsa};
        CHECK_THROWS_AS(build_composite(root_params, one, one_key), ComponentCountError);

        std::vector<algs::AlgorithmDescriptor> nested{rsa, root.tbs.spki_alg};
        CHECK_THROWS_AS(CompositeDescriptor::make(nested), NestedCompositeError);
    }
}

TEST_CASE("parallel chains") {
    const Registry& reg = Registry::instance();
    const auto& rsa = reg.lookup("rsa2048-stub");
    const auto& dil3 = reg.lookup("dilithium-3");

    KeyPair rsa_root_key = algs::stub_keygen(rsa, seed_of(40));
    KeyPair dil_root_key = algs::stub_keygen(dil3, seed_of(41));
    Certificate rsa_root = self_signed(rsa_root_key, "Classical Root");
    Certificate dil_root = self_signed(dil_root_key, "PQ Root");

    std::vector<ChainIssuer> issuers{
        {{rsa_root}, rsa_root_key},
        {{dil_root}, dil_root_key},
    };
    std::vector<algs::AlgorithmDescriptor> algos{rsa, dil3};

    uint64_t counter = 100;
    auto next_serial = [&] { return serial_of(counter++); };
    DistinguishedName host = DistinguishedName().cn("host.example").o("Test PKI");

    auto chains = make_parallel_chains(host, algos, issuers, days(90), next_serial,
                                       seed_of(42));
    REQUIRE(chains.size() == 2);

    CHECK(chains[0].chain[0].tbs.subject == chains[1].chain[0].tbs.subject);
    CHECK(chains[0].chain[0].tbs.serial != chains[1].chain[0].tbs.serial);
    CHECK(chains[0].chain[0].tbs.spki_key != chains[1].chain[0].tbs.spki_key);
    CHECK(chains[1].chain[0].tbs.spki_alg.name == "dilithium-3");
    CHECK(verify_base_signature(chains[0].chain[0], rsa_root));
    CHECK(verify_base_signature(chains[1].chain[0], dil_root));

    SUBCASE("duplicate algorithms rejected") {
        std::vector<algs::AlgorithmDescriptor> dup{dil3, dil3};
        std::vector<ChainIssuer> two{{{dil_root}, dil_root_key}, {{dil_root}, dil_root_key}};
        CHECK_THROWS_AS(
            make_parallel_chains(host, dup, two, days(90), next_serial, seed_of(1)),
            DuplicateAlgorithmError);
    }
}

TEST_CASE("format classification is total and mutually exclusive") {
    const Registry& reg = Registry::instance();
    std::mt19937_64 rng(777);
    const auto classical = reg.classical_descriptors();
    const auto pq = reg.pq_descriptors();

    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 60; ++i) {
        const auto& cls = classical[rng() % classical.size()];
        const auto& alt = pq[rng() % pq.size()];
        KeyPair ck = algs::stub_keygen(cls, seed_of(rng()));
        KeyPair pk = algs::stub_keygen(alt, seed_of(rng()));
        IssueParams p = params_for(1000 + i, "subject", "issuer");

        Certificate cert;
        switch (i % 3) {
            case 0: cert = build_pure(p, alt, pk.public_key, pk); break;
            case 1:
                cert = build_hybrid(p, cls, ck.public_key, alt, pk.public_key, ck, pk);
                break;
            default: {
                std::vector<ComponentKey> pubs{{cls, ck.public_key}, {alt, pk.public_key}};
                std::vector<KeyPair> keys{ck, pk};
                cert = build_composite(p, pubs, keys);
                break;
            }
        }
        Certificate back = Certificate::parse(cert.serialize());
        CHECK(int(back.format) == i % 3);
        counts[int(back.format)]++;
        CHECK(back == cert);
    }
    CHECK(counts[0] == 20);
    CHECK(counts[1] == 20);
    CHECK(counts[2] == 20);
}

TEST_CASE("extension builders") {
    Bytes key(100, 0xAA);

    Extension ski = make_ski(key);
    CHECK(read_key_id(ski).size() == 20);

    Extension aki = make_aki(key);
    CHECK(read_key_id(aki) == read_key_id(ski));  // same digest, same key bytes

    Extension ski256 = make_ski(key, HashAlg::Sha256);
    CHECK(read_key_id(ski256).size() == 32);

    Extension bc = make_basic_constraints(true, true);
    CHECK(read_basic_constraints(bc).ca);
    CHECK_FALSE(read_basic_constraints(make_basic_constraints(false, false)).ca);
}

TEST_CASE("builder validation errors") {
    const auto& alg = Registry::instance().lookup("falcon-512");
    KeyPair key = algs::stub_keygen(alg, seed_of(50));

    IssueParams p = params_for(1, "x", "x");
    p.validity.not_after = p.validity.not_before;
    CHECK_THROWS_AS(build_pure(p, alg, key.public_key, key), InvalidValidityError);

    IssueParams zero_serial = params_for(1, "x", "x");
    zero_serial.serial = Bytes(16, 0);
    CHECK_THROWS_AS(build_pure(zero_serial, alg, key.public_key, key),
                    MalformedCertificateError);
}

TEST_CASE("slh-dsa-256-fast certificate exceeds 43KB") {
    const auto& alg = Registry::instance().lookup("slh-dsa-256-fast");
    KeyPair key = algs::stub_keygen(alg, seed_of(60));
    Certificate cert = self_signed(key, "Big Root");
    CHECK(cert.serialize().size() > 43 * 1024);
}
