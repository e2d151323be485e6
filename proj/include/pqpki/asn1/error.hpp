/**
 * Error codes for the DER codec. Every decode failure carries the byte
 * offset where the condition was detected.
 */

#ifndef PQPKI_ASN1_ERROR_HPP
#define PQPKI_ASN1_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqpki::asn1 {

enum class ErrorCode {
    UnsupportedTag,
    TruncatedInput,
    TrailingBytes,
    IndefiniteLength,
    NonMinimalLength,
    InvalidOid,
    InvalidInteger,
    InvalidBoolean,
    InvalidString,
    UnrepresentableTime,
    InvalidTime,
    TypeMismatch,
};

const char* error_code_name(ErrorCode code);

class Asn1Error : public std::runtime_error {
public:
    Asn1Error(ErrorCode code, const std::string& detail, size_t offset = 0)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail +
                             " (offset " + std::to_string(offset) + ")"),
          code_(code),
          offset_(offset) {}

    ErrorCode code() const { return code_; }
    size_t offset() const { return offset_; }

private:
    ErrorCode code_;
    size_t offset_;
};

}  // namespace pqpki::asn1

#endif
