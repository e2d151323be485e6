#include "pqpki/cert/name.hpp"

#include <stdexcept>

namespace pqpki::cert {

namespace {

const char* attr_label(const asn1::Oid& oid) {
    if (oid == attr::common_name) return "CN";
    if (oid == attr::organization) return "O";
    if (oid == attr::country) return "C";
    return nullptr;
}

}  // namespace

DistinguishedName& DistinguishedName::add(const asn1::Oid& attribute, std::string value) {
    if (!attr_label(attribute)) {
        throw std::invalid_argument("unsupported DN attribute " + attribute.to_string());
    }
    if (value.empty()) {
        throw std::invalid_argument("empty DN attribute value");
    }
    parts_.emplace_back(attribute, std::move(value));
    return *this;
}

DistinguishedName DistinguishedName::parse(std::string_view text) {
    DistinguishedName dn;
    size_t start = 0;
    while (start < text.size()) {
        size_t comma = text.find(',', start);
        std::string_view part = text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        size_t eq = part.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("DN component without '=': " + std::string(part));
        }
        std::string_view key = part.substr(0, eq);
        std::string value(part.substr(eq + 1));
        if (key == "CN") {
            dn.cn(std::move(value));
        } else if (key == "O") {
            dn.o(std::move(value));
        } else if (key == "C") {
            dn.c(std::move(value));
        } else {
            throw std::invalid_argument("unsupported DN attribute \"" + std::string(key) + "\"");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (dn.empty()) throw std::invalid_argument("empty distinguished name");
    return dn;
}

std::string DistinguishedName::to_string() const {
    std::string out;
    for (const auto& [oid, value] : parts_) {
        if (!out.empty()) out += ",";
        out += attr_label(oid);
        out += '=';
        out += value;
    }
    return out;
}

asn1::DerValue DistinguishedName::to_der() const {
    // RDNSequence with one AttributeTypeAndValue per RDN SET
    std::vector<asn1::DerValue> rdns;
    for (const auto& [oid, value] : parts_) {
        rdns.push_back(asn1::DerValue::set({asn1::DerValue::sequence({
            asn1::DerValue::object_identifier(oid),
            asn1::DerValue::utf8_string(value),
        })}));
    }
    return asn1::DerValue::sequence(std::move(rdns));
}

DistinguishedName DistinguishedName::from_der(const asn1::DerValue& der) {
    DistinguishedName dn;
    for (const asn1::DerValue& rdn : der.children()) {
        if (!rdn.is_universal(asn1::tag::Set) || rdn.child_count() != 1) {
            throw std::invalid_argument("RDN must be a single-attribute SET");
        }
        const asn1::DerValue& atv = rdn.child(0);
        if (atv.child_count() != 2) {
            throw std::invalid_argument("AttributeTypeAndValue needs 2 elements");
        }
        dn.add(atv.child(0).read_oid(), atv.child(1).read_string());
    }
    return dn;
}

}  // namespace pqpki::cert
