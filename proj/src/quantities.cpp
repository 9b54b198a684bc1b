#include "fairplan/quantities.hpp"

#include <cmath>

namespace fairplan {

namespace {

std::string with_value(std::string_view what, std::string_view rule, double v) {
    return std::string(what) + " " + std::string(rule) + " (got " + std::to_string(v) + ")";
}

} // namespace

double require_non_negative(double v, std::string_view what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw validation_error(with_value(what, "must be finite and >= 0", v));
    }
    return v;
}

double require_positive(double v, std::string_view what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw validation_error(with_value(what, "must be finite and > 0", v));
    }
    return v;
}

double require_fraction(double v, std::string_view what) {
    if (!std::isfinite(v) || v <= 0.0 || v > 1.0) {
        throw validation_error(with_value(what, "must lie in (0, 1]", v));
    }
    return v;
}

std::string_view to_string(byte_convention c) noexcept {
    return c == byte_convention::binary ? "binary" : "decimal";
}

byte_convention parse_byte_convention(std::string_view text) {
    if (text == "decimal") {
        return byte_convention::decimal;
    }
    if (text == "binary") {
        return byte_convention::binary;
    }
    throw validation_error("unknown byte convention '" + std::string(text) + "'");
}

prefix parse_prefix(std::string_view text) {
    if (text.empty()) return prefix::none;
    if (text == "k") return prefix::kilo;
    if (text == "M") return prefix::mega;
    if (text == "G") return prefix::giga;
    if (text == "T") return prefix::tera;
    if (text == "P") return prefix::peta;
    throw validation_error("unknown prefix '" + std::string(text) + "'");
}

std::string_view to_string(prefix p) noexcept {
    switch (p) {
    case prefix::none: return "";
    case prefix::kilo: return "k";
    case prefix::mega: return "M";
    case prefix::giga: return "G";
    case prefix::tera: return "T";
    case prefix::peta: return "P";
    }
    return "";
}

double prefix_factor(prefix p, byte_convention c) noexcept {
    double const base = c == byte_convention::binary ? 1024.0 : 1000.0;
    double factor = 1.0;
    for (int i = 0; i < static_cast<int>(p); ++i) {
        factor *= base;
    }
    return factor;
}

compute_power compute_power::hs06(double value) {
    return compute_power{require_non_negative(value, "compute power"), 0};
}

compute_power compute_power::operator*(double factor) const {
    return hs06(value_ * require_non_negative(factor, "compute power scale"));
}

compute_power compute_power::operator/(double divisor) const {
    return hs06(value_ / require_positive(divisor, "compute power divisor"));
}

data_volume data_volume::bytes(double value, byte_convention c) {
    data_volume v;
    v.bytes_ = require_non_negative(value, "data volume");
    v.convention_ = c;
    return v;
}

data_volume data_volume::operator+(data_volume rhs) const noexcept {
    data_volume v = *this;
    v.bytes_ += rhs.bytes_;
    return v;
}

data_volume& data_volume::operator+=(data_volume rhs) noexcept {
    bytes_ += rhs.bytes_;
    return *this;
}

data_volume data_volume::operator*(double factor) const {
    return bytes(bytes_ * require_non_negative(factor, "data volume scale"), convention_);
}

data_volume data_volume::operator/(double divisor) const {
    return bytes(bytes_ / require_positive(divisor, "data volume divisor"), convention_);
}

rate rate::events_per_second(double value) {
    return rate{require_non_negative(value, "event rate"), rate_dimension::events_per_second};
}

rate rate::bytes_per_second(double value) {
    return rate{require_non_negative(value, "data rate"), rate_dimension::bytes_per_second};
}

rate rate::operator+(rate rhs) const {
    if (dimension_ != rhs.dimension_) {
        throw validation_error("cannot add an event rate and a data rate");
    }
    return rate{value_ + rhs.value_, dimension_};
}

rate& rate::operator+=(rate rhs) {
    *this = *this + rhs;
    return *this;
}

rate rate::operator*(double factor) const {
    return rate{value_ * require_non_negative(factor, "rate scale"), dimension_};
}

rate rate::operator/(double divisor) const {
    return rate{value_ / require_positive(divisor, "rate divisor"), dimension_};
}

duration duration::seconds(double s) {
    duration d;
    d.seconds_ = require_non_negative(s, "duration");
    return d;
}

duration duration::operator+(duration rhs) const noexcept {
    duration d;
    d.seconds_ = seconds_ + rhs.seconds_;
    return d;
}

duration duration::operator*(double factor) const {
    return seconds(seconds_ * require_non_negative(factor, "duration scale"));
}

rate data_rate(rate events, data_volume event_size) {
    if (events.dimension() != rate_dimension::events_per_second) {
        throw validation_error("data_rate expects an event rate");
    }
    return rate::bytes_per_second(events.value() * event_size.bytes());
}

data_volume volume_over(rate bytes, duration span, byte_convention c) {
    if (bytes.dimension() != rate_dimension::bytes_per_second) {
        throw validation_error("volume_over expects a data rate");
    }
    return data_volume::bytes(bytes.value() * span.seconds(), c);
}

data_volume convert_volume(double value, prefix p, byte_convention c) {
    require_non_negative(value, "volume value");
    return data_volume::bytes(value * prefix_factor(p, c), c);
}

compute_power hs06_scale_by_clock(compute_power reference, double reference_clock_mhz,
                                  double target_clock_mhz) {
    require_positive(reference_clock_mhz, "reference clock");
    require_positive(target_clock_mhz, "target clock");
    return compute_power::hs06(reference.value() * target_clock_mhz / reference_clock_mhz);
}

} // namespace fairplan
