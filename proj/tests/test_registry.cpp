#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "pqpki/algs/registry.hpp"
#include "pqpki/algs/stub_signer.hpp"

using namespace pqpki;
using namespace pqpki::algs;

namespace {

struct Row {
    const char* name;
    size_t pk, sk, sig;
    int level;
};

// Golden constants: the published key / signature byte sizes and security
// levels for the NIST PQ signature algorithms.
constexpr Row kGolden[] = {
    {"falcon-512", 897, 1281, 666, 1},
    {"falcon-1024", 1793, 2305, 1280, 5},
    {"dilithium-2", 1312, 2528, 2420, 2},
    {"dilithium-3", 1952, 4000, 3293, 3},
    {"dilithium-5", 2592, 4864, 4595, 5},
    {"slh-dsa-128-small", 32, 64, 7856, 1},
    {"slh-dsa-128-fast", 32, 64, 17088, 1},
    {"slh-dsa-192-small", 48, 96, 16224, 3},
    {"slh-dsa-192-fast", 48, 96, 35664, 3},
    {"slh-dsa-256-small", 64, 128, 29792, 5},
    {"slh-dsa-256-fast", 64, 128, 49856, 5},
};

Bytes seed_of(uint64_t n) {
    Bytes s(8);
    for (int i = 0; i < 8; ++i) s[i] = uint8_t(n >> (8 * i));
    return s;
}

}  // namespace

TEST_CASE("registry matches the golden size table field by field") {
    const Registry& reg = Registry::instance();
    auto pq = reg.pq_descriptors();
    CHECK(pq.size() == 11);

    for (const Row& row : kGolden) {
        const AlgorithmDescriptor& d = reg.lookup(row.name);
        CAPTURE(row.name);
        CHECK(d.public_key_size == row.pk);
        CHECK(d.private_key_size == row.sk);
        CHECK(d.signature_size == row.sig);
        CHECK(d.security_level == row.level);
        CHECK(d.is_pq());
    }

    SUBCASE("level-5 rows") {
        for (const char* name : {"falcon-1024", "dilithium-5", "slh-dsa-256-small",
                                 "slh-dsa-256-fast"}) {
            CHECK(reg.lookup(name).security_level == 5);
        }
    }

    SUBCASE("names and oids unique, sizes positive, levels in range") {
        std::set<std::string> names, oids;
        std::set<int> allowed{0, 1, 2, 3, 5};
        for (const auto& d : reg.all()) {
            CHECK(names.insert(d.name).second);
            CHECK(oids.insert(d.oid.to_string()).second);
            CHECK(d.public_key_size > 0);
            CHECK(d.private_key_size > 0);
            CHECK(d.signature_size > 0);
            CHECK(allowed.count(d.security_level) == 1);
        }
    }

    SUBCASE("lookup by oid string") {
        const auto& falcon = reg.lookup("falcon-512");
        CHECK(reg.lookup(falcon.oid.to_string()).name == "falcon-512");
        CHECK_THROWS_AS(reg.lookup("falcon-9000"), UnknownAlgorithmError);
    }
}

TEST_CASE("classical stubs") {
    auto stubs = classical_stub_descriptors();
    REQUIRE(stubs.size() == 2);
    CHECK(stubs[0].name == "rsa2048-stub");
    CHECK(stubs[0].signature_size == 256);
    CHECK(stubs[1].name == "ecdsa-p256-stub");
    CHECK(stubs[1].signature_size == 64);
    for (const auto& d : stubs) CHECK(d.security_level == 0);
}

TEST_CASE("stub keygen is deterministic and size faithful") {
    const Registry& reg = Registry::instance();
    const auto& falcon = reg.lookup("falcon-512");

    KeyPair a = stub_keygen(falcon, seed_of(42));
    KeyPair b = stub_keygen(falcon, seed_of(42));
    CHECK(a.public_key == b.public_key);
    CHECK(a.private_key == b.private_key);
    CHECK(a.public_key.size() == 897);
    CHECK(a.private_key.size() == 1281);

    KeyPair c = stub_keygen(falcon, seed_of(43));
    CHECK(c.public_key != a.public_key);

    CHECK(stub_keygen(reg.lookup("slh-dsa-128-small"), seed_of(1)).private_key.size() == 64);
    CHECK(stub_keygen(reg.lookup("slh-dsa-128-fast"), seed_of(1)).private_key.size() == 64);
}

TEST_CASE("stub signatures have the registered size for every descriptor") {
    const Registry& reg = Registry::instance();
    std::mt19937_64 rng(7);
    for (const auto& d : reg.all()) {
        KeyPair kp = stub_keygen(d, seed_of(rng()));
        for (int i = 0; i < 3; ++i) {
            Bytes msg(rng() % 100 + 1);
            for (auto& x : msg) x = uint8_t(rng());
            Bytes sig = stub_sign(d, kp.private_key, msg);
            CHECK(sig.size() == d.signature_size);
            CHECK(stub_verify(d, kp.public_key, msg, sig));
        }
    }
}

TEST_CASE("specific signature sizes") {
    const Registry& reg = Registry::instance();
    Bytes msg = to_bytes(std::string_view("any message"));

    KeyPair d2 = stub_keygen(reg.lookup("dilithium-2"), seed_of(5));
    CHECK(stub_sign(d2.algorithm, d2.private_key, msg).size() == 2420);

    KeyPair slh = stub_keygen(reg.lookup("slh-dsa-192-small"), seed_of(6));
    CHECK(stub_sign(slh.algorithm, slh.private_key, msg).size() == 16224);
}

TEST_CASE("no signature collisions across distinct messages") {
    const auto& desc = Registry::instance().lookup("falcon-512");
    KeyPair kp = stub_keygen(desc, seed_of(99));
    std::mt19937_64 rng(123);
    std::set<Bytes> seen;
    for (int i = 0; i < 10000; ++i) {
        Bytes msg(16);
        for (auto& x : msg) x = uint8_t(rng());
        Bytes sig = stub_sign(desc, kp.private_key, msg);
        CHECK(seen.insert(std::move(sig)).second);
    }
}

TEST_CASE("stub verification soundness under single-byte perturbation") {
    const Registry& reg = Registry::instance();
    std::mt19937_64 rng(2024);
    const auto& desc = reg.lookup("dilithium-3");

    for (int trial = 0; trial < 50; ++trial) {
        KeyPair kp = stub_keygen(desc, seed_of(rng()));
        Bytes msg(32);
        for (auto& x : msg) x = uint8_t(rng());
        Bytes sig = stub_sign(desc, kp.private_key, msg);
        REQUIRE(stub_verify(desc, kp.public_key, msg, sig));

        Bytes bad_sig = sig;
        bad_sig[rng() % bad_sig.size()] ^= uint8_t(1 + rng() % 255);
        CHECK_FALSE(stub_verify(desc, kp.public_key, msg, bad_sig));

        Bytes bad_msg = msg;
        bad_msg[rng() % bad_msg.size()] ^= uint8_t(1 + rng() % 255);
        CHECK_FALSE(stub_verify(desc, kp.public_key, bad_msg, sig));

        Bytes bad_pk = kp.public_key;
        bad_pk[rng() % bad_pk.size()] ^= uint8_t(1 + rng() % 255);
        CHECK_FALSE(stub_verify(desc, bad_pk, msg, sig));
    }
}

TEST_CASE("length mismatches are reported as errors") {
    const auto& desc = Registry::instance().lookup("falcon-512");
    KeyPair kp = stub_keygen(desc, seed_of(11));
    Bytes msg{1, 2, 3};
    Bytes sig = stub_sign(desc, kp.private_key, msg);

    Bytes short_key(kp.private_key.begin(), kp.private_key.end() - 1);
    CHECK_THROWS_AS(stub_sign(desc, short_key, msg), KeyLengthError);

    Bytes short_sig(sig.begin(), sig.end() - 1);
    CHECK_THROWS_AS(stub_verify(desc, kp.public_key, msg, short_sig), KeyLengthError);

    Bytes short_pk(kp.public_key.begin(), kp.public_key.end() - 1);
    CHECK_THROWS_AS(stub_verify(desc, short_pk, msg, sig), KeyLengthError);
}

TEST_CASE("registered keypairs verify after table rebuild") {
    const auto& desc = Registry::instance().lookup("falcon-1024");
    KeyPair kp = stub_keygen(desc, seed_of(314));
    Bytes rebuilt_pk = register_keypair(desc, kp.private_key);
    CHECK(rebuilt_pk == kp.public_key);
}

TEST_CASE("registry json dump") {
    auto parsed = nlohmann::json::parse(Registry::instance().to_json());
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 13);  // 11 PQ + 2 classical stubs
    bool found = false;
    for (const auto& row : parsed) {
        if (row["name"] == "slh-dsa-256-fast") {
            found = true;
            CHECK(row["signature_size"] == 49856);
            CHECK(row["security_level"] == 5);
            CHECK(row["variant"] == "fast");
        }
    }
    CHECK(found);
}
