/**
 * PEM armoring: base64 between BEGIN/END header lines.
 */

#ifndef PQPKI_ASN1_PEM_HPP
#define PQPKI_ASN1_PEM_HPP

#include <string>
#include <string_view>

#include "pqpki/bytes.hpp"

namespace pqpki::asn1 {

std::string pem_encode(std::string_view label, ByteView der);

// Extracts the first block with the given label; throws std::runtime_error
// if the label is absent or the base64 body is malformed.
Bytes pem_decode(std::string_view label, std::string_view text);

}  // namespace pqpki::asn1

#endif
