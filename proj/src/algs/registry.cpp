#include "pqpki/algs/registry.hpp"

#include <nlohmann/json.hpp>

namespace pqpki::algs {

const char* family_name(Family f) {
    switch (f) {
        case Family::Classical: return "classical";
        case Family::LatticeFalcon: return "lattice-falcon";
        case Family::LatticeDilithium: return "lattice-dilithium";
        case Family::HashSlhDsa: return "hash-slh-dsa";
        case Family::Composite: return "composite";
    }
    return "?";
}

const asn1::Oid& composite_oid() {
    static const asn1::Oid oid{1, 3, 9999, 9, 1};
    return oid;
}

std::vector<AlgorithmDescriptor> classical_stub_descriptors() {
    return {
        {"rsa2048-stub", {1, 3, 9999, 0, 1}, 270, 1190, 256, 0, Family::Classical, {}},
        {"ecdsa-p256-stub", {1, 3, 9999, 0, 2}, 65, 32, 64, 0, Family::Classical, {}},
    };
}

Registry::Registry() {
    entries_ = classical_stub_descriptors();

    auto add = [&](std::string name, asn1::Oid oid, size_t pk, size_t sk, size_t sig,
                   int level, Family fam, std::optional<SlhVariant> var = {}) {
        entries_.push_back({std::move(name), std::move(oid), pk, sk, sig, level, fam, var});
    };

    add("falcon-512", {1, 3, 9999, 1, 1}, 897, 1281, 666, 1, Family::LatticeFalcon);
    add("falcon-1024", {1, 3, 9999, 1, 2}, 1793, 2305, 1280, 5, Family::LatticeFalcon);
    add("dilithium-2", {1, 3, 9999, 2, 1}, 1312, 2528, 2420, 2, Family::LatticeDilithium);
    add("dilithium-3", {1, 3, 9999, 2, 2}, 1952, 4000, 3293, 3, Family::LatticeDilithium);
    add("dilithium-5", {1, 3, 9999, 2, 3}, 2592, 4864, 4595, 5, Family::LatticeDilithium);
    add("slh-dsa-128-small", {1, 3, 9999, 3, 1}, 32, 64, 7856, 1, Family::HashSlhDsa,
        SlhVariant::Small);
    add("slh-dsa-128-fast", {1, 3, 9999, 3, 2}, 32, 64, 17088, 1, Family::HashSlhDsa,
        SlhVariant::Fast);
    add("slh-dsa-192-small", {1, 3, 9999, 3, 3}, 48, 96, 16224, 3, Family::HashSlhDsa,
        SlhVariant::Small);
    add("slh-dsa-192-fast", {1, 3, 9999, 3, 4}, 48, 96, 35664, 3, Family::HashSlhDsa,
        SlhVariant::Fast);
    add("slh-dsa-256-small", {1, 3, 9999, 3, 5}, 64, 128, 29792, 5, Family::HashSlhDsa,
        SlhVariant::Small);
    add("slh-dsa-256-fast", {1, 3, 9999, 3, 6}, 64, 128, 49856, 5, Family::HashSlhDsa,
        SlhVariant::Fast);
}

const Registry& Registry::instance() {
    static const Registry registry;
    return registry;
}

const AlgorithmDescriptor* Registry::find(std::string_view name_or_oid) const noexcept {
    for (const auto& d : entries_) {
        if (d.name == name_or_oid) return &d;
    }
    for (const auto& d : entries_) {
        if (d.oid.to_string() == name_or_oid) return &d;
    }
    return nullptr;
}

const AlgorithmDescriptor* Registry::find_oid(const asn1::Oid& oid) const noexcept {
    for (const auto& d : entries_) {
        if (d.oid == oid) return &d;
    }
    return nullptr;
}

const AlgorithmDescriptor& Registry::lookup(std::string_view name_or_oid) const {
    const AlgorithmDescriptor* d = find(name_or_oid);
    if (!d) throw UnknownAlgorithmError(std::string(name_or_oid));
    return *d;
}

std::vector<AlgorithmDescriptor> Registry::pq_descriptors() const {
    std::vector<AlgorithmDescriptor> out;
    for (const auto& d : entries_) {
        if (d.is_pq()) out.push_back(d);
    }
    return out;
}

std::vector<AlgorithmDescriptor> Registry::classical_descriptors() const {
    std::vector<AlgorithmDescriptor> out;
    for (const auto& d : entries_) {
        if (!d.is_pq()) out.push_back(d);
    }
    return out;
}

std::string Registry::to_json(bool pretty) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& d : entries_) {
        nlohmann::json row = {
            {"name", d.name},
            {"oid", d.oid.to_string()},
            {"public_key_size", d.public_key_size},
            {"private_key_size", d.private_key_size},
            {"signature_size", d.signature_size},
            {"security_level", d.security_level},
            {"family", family_name(d.family)},
        };
        if (d.variant) {
            row["variant"] = *d.variant == SlhVariant::Small ? "small" : "fast";
        }
        rows.push_back(std::move(row));
    }
    return pretty ? rows.dump(2) : rows.dump();
}

}  // namespace pqpki::algs
