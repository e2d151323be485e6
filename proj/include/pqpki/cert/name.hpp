/**
 * X.501 distinguished names restricted to CN / O / C attributes with
 * UTF8String values.
 */

#ifndef PQPKI_CERT_NAME_HPP
#define PQPKI_CERT_NAME_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqpki/asn1/der.hpp"

namespace pqpki::cert {

namespace attr {
inline const asn1::Oid common_name{2, 5, 4, 3};
inline const asn1::Oid organization{2, 5, 4, 10};
inline const asn1::Oid country{2, 5, 4, 6};
}  // namespace attr

class DistinguishedName {
public:
    DistinguishedName() = default;

    DistinguishedName& add(const asn1::Oid& attribute, std::string value);
    DistinguishedName& cn(std::string value) { return add(attr::common_name, std::move(value)); }
    DistinguishedName& o(std::string value) { return add(attr::organization, std::move(value)); }
    DistinguishedName& c(std::string value) { return add(attr::country, std::move(value)); }

    static DistinguishedName parse(std::string_view text);  // "CN=x,O=y,C=z"

    bool empty() const { return parts_.empty(); }
    const std::vector<std::pair<asn1::Oid, std::string>>& parts() const { return parts_; }
    std::string to_string() const;

    asn1::DerValue to_der() const;
    Bytes encode() const { return asn1::encode(to_der()); }
    static DistinguishedName from_der(const asn1::DerValue& der);

    bool operator==(const DistinguishedName&) const = default;

private:
    std::vector<std::pair<asn1::Oid, std::string>> parts_;
};

}  // namespace pqpki::cert

#endif
