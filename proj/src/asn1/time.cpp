#include "pqpki/asn1/time.hpp"

#include <chrono>
#include <cstdio>

#include "pqpki/asn1/error.hpp"

namespace pqpki::asn1 {

namespace {

using days = std::chrono::days;
using sys_days = std::chrono::sys_days;

struct Civil {
    int year, month, day, hour, minute, second;
};

Civil civil_from_epoch(int64_t epoch) {
    int64_t d = epoch / 86400;
    int64_t rem = epoch % 86400;
    if (rem < 0) {
        rem += 86400;
        d -= 1;
    }
    auto ymd = std::chrono::year_month_day(sys_days(days(d)));
    return Civil{int(ymd.year()), int(unsigned(ymd.month())), int(unsigned(ymd.day())),
                 int(rem / 3600), int((rem % 3600) / 60), int(rem % 60)};
}

int64_t epoch_from_civil(const Civil& c) {
    auto ymd = std::chrono::year{c.year} / c.month / c.day;
    if (!ymd.ok()) {
        throw Asn1Error(ErrorCode::InvalidTime, "invalid calendar date");
    }
    int64_t d = sys_days(ymd).time_since_epoch().count();
    return d * 86400 + c.hour * 3600 + c.minute * 60 + c.second;
}

int digits(std::string_view s, size_t pos, size_t n) {
    int v = 0;
    for (size_t i = pos; i < pos + n; ++i) {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') {
            throw Asn1Error(ErrorCode::InvalidTime, "non-digit in time string");
        }
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

}  // namespace

TimeValue TimeValue::utc(int year, int month, int day, int hour, int minute, int second,
                         TimeEncoding enc) {
    return TimeValue{epoch_from_civil({year, month, day, hour, minute, second}), enc};
}

TimeValue TimeValue::from_epoch(int64_t seconds, TimeEncoding enc) {
    return TimeValue{seconds, enc};
}

TimeValue TimeValue::plus_days(int64_t d) const {
    return TimeValue{epoch_seconds + d * 86400, encoding};
}

TimeValue TimeValue::plus_seconds(int64_t s) const {
    return TimeValue{epoch_seconds + s, encoding};
}

int TimeValue::year() const { return civil_from_epoch(epoch_seconds).year; }

std::string TimeValue::format() const {
    Civil c = civil_from_epoch(epoch_seconds);
    char buf[20];
    if (encoding == TimeEncoding::UtcTime) {
        if (c.year < 1950 || c.year > 2049) {
            throw Asn1Error(ErrorCode::UnrepresentableTime,
                            "year " + std::to_string(c.year) + " outside UTCTime range 1950-2049");
        }
        std::snprintf(buf, sizeof buf, "%02d%02d%02d%02d%02d%02dZ", c.year % 100, c.month,
                      c.day, c.hour, c.minute, c.second);
    } else {
        if (c.year < 0 || c.year > 9999) {
            throw Asn1Error(ErrorCode::UnrepresentableTime, "year outside GeneralizedTime range");
        }
        std::snprintf(buf, sizeof buf, "%04d%02d%02d%02d%02d%02dZ", c.year, c.month, c.day,
                      c.hour, c.minute, c.second);
    }
    return buf;
}

TimeValue TimeValue::parse(std::string_view text, TimeEncoding enc) {
    size_t want = enc == TimeEncoding::UtcTime ? 13 : 15;
    if (text.size() != want || text.back() != 'Z') {
        throw Asn1Error(ErrorCode::InvalidTime, "time string must be fixed-width ending in Z");
    }
    Civil c{};
    size_t p = 0;
    if (enc == TimeEncoding::UtcTime) {
        int yy = digits(text, 0, 2);
        c.year = yy >= 50 ? 1900 + yy : 2000 + yy;
        p = 2;
    } else {
        c.year = digits(text, 0, 4);
        p = 4;
    }
    c.month = digits(text, p, 2);
    c.day = digits(text, p + 2, 2);
    c.hour = digits(text, p + 4, 2);
    c.minute = digits(text, p + 6, 2);
    c.second = digits(text, p + 8, 2);
    if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31 || c.hour > 23 ||
        c.minute > 59 || c.second > 59) {
        throw Asn1Error(ErrorCode::InvalidTime, "time component out of range");
    }
    return TimeValue{epoch_from_civil(c), enc};
}

}  // namespace pqpki::asn1
