/**
 * Signature-algorithm registry: the NIST PQ signature descriptors with
 * their exact key and signature byte sizes and security levels, plus
 * classical stub entries for transition scenarios.
 *
 * PQ descriptors carry OIDs under the private experimental arc 1.3.9999:
 *   1.3.9999.0.x classical stubs, 1.3.9999.1.x Falcon, 1.3.9999.2.x
 *   Dilithium, 1.3.9999.3.x SLH-DSA, 1.3.9999.9.1 the composite container.
 */

#ifndef PQPKI_ALGS_REGISTRY_HPP
#define PQPKI_ALGS_REGISTRY_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqpki/asn1/oid.hpp"

namespace pqpki::algs {

enum class Family { Classical, LatticeFalcon, LatticeDilithium, HashSlhDsa, Composite };
enum class SlhVariant { Small, Fast };

const char* family_name(Family f);

struct AlgorithmDescriptor {
    std::string name;
    asn1::Oid oid;
    size_t public_key_size = 0;
    size_t private_key_size = 0;
    size_t signature_size = 0;
    int security_level = 0;  // 0 = classical, no PQ level
    Family family = Family::Classical;
    std::optional<SlhVariant> variant;  // SLH-DSA only

    bool is_pq() const { return security_level > 0; }
    bool operator==(const AlgorithmDescriptor&) const = default;
};

struct UnknownAlgorithmError : std::runtime_error {
    explicit UnknownAlgorithmError(const std::string& what)
        : std::runtime_error("unknown algorithm: " + what) {}
};

class Registry {
public:
    static const Registry& instance();

    const AlgorithmDescriptor& lookup(std::string_view name_or_oid) const;
    const AlgorithmDescriptor* find(std::string_view name_or_oid) const noexcept;
    const AlgorithmDescriptor* find_oid(const asn1::Oid& oid) const noexcept;

    std::span<const AlgorithmDescriptor> all() const { return entries_; }
    std::vector<AlgorithmDescriptor> pq_descriptors() const;
    std::vector<AlgorithmDescriptor> classical_descriptors() const;

    // dump for the CLI `algs` command, one object per row
    std::string to_json(bool pretty = true) const;

private:
    Registry();
    std::vector<AlgorithmDescriptor> entries_;
};

// OID marking a composite key / signature container.
const asn1::Oid& composite_oid();

// Classical stand-ins: rsa2048-stub (256-byte signatures) and
// ecdsa-p256-stub (64-byte raw signatures), both security level 0.
std::vector<AlgorithmDescriptor> classical_stub_descriptors();

}  // namespace pqpki::algs

#endif
