/**
 * Calendar time at one-second resolution, UTC, carried either as
 * UTCTime (YYMMDDHHMMSSZ, years 1950-2049) or GeneralizedTime
 * (YYYYMMDDHHMMSSZ).
 */

#ifndef PQPKI_ASN1_TIME_HPP
#define PQPKI_ASN1_TIME_HPP

#include <cstdint>
#include <string>

namespace pqpki::asn1 {

enum class TimeEncoding { UtcTime, GeneralizedTime };

struct TimeValue {
    int64_t epoch_seconds = 0;  // seconds since 1970-01-01T00:00:00Z
    TimeEncoding encoding = TimeEncoding::GeneralizedTime;

    static TimeValue utc(int year, int month, int day, int hour = 0, int minute = 0,
                         int second = 0, TimeEncoding enc = TimeEncoding::GeneralizedTime);
    static TimeValue from_epoch(int64_t seconds,
                                TimeEncoding enc = TimeEncoding::GeneralizedTime);

    TimeValue plus_days(int64_t days) const;
    TimeValue plus_seconds(int64_t seconds) const;
    TimeValue with_encoding(TimeEncoding enc) const { return {epoch_seconds, enc}; }

    int year() const;

    // "300101000000Z" / "20600101000000Z"; throws UnrepresentableTime when the
    // year does not fit the chosen encoding.
    std::string format() const;
    static TimeValue parse(std::string_view text, TimeEncoding enc);

    bool operator==(const TimeValue&) const = default;
};

inline bool same_instant(const TimeValue& a, const TimeValue& b) {
    return a.epoch_seconds == b.epoch_seconds;
}

}  // namespace pqpki::asn1

#endif
