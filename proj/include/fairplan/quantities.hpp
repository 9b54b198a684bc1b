#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairplan {

/// Raised when an input violates a documented precondition.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a well-formed input cannot be evaluated (e.g. a missing
/// configuration value discovered during aggregation).
class computation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class byte_convention { decimal, binary };

enum class prefix { none, kilo, mega, giga, tera, peta };

std::string_view to_string(byte_convention c) noexcept;
byte_convention parse_byte_convention(std::string_view text);

/// Accepts "", "k", "M", "G", "T", "P".
prefix parse_prefix(std::string_view text);
std::string_view to_string(prefix p) noexcept;

/// Multiplier of `p` under convention `c` (1000^n or 1024^n).
double prefix_factor(prefix p, byte_convention c) noexcept;

/// CPU capacity in HEPSpec06 units.
class compute_power {
public:
    constexpr compute_power() noexcept = default;
    static compute_power hs06(double value);

    constexpr double value() const noexcept { return value_; }

    compute_power operator+(compute_power rhs) const noexcept { return compute_power{value_ + rhs.value_, 0}; }
    compute_power& operator+=(compute_power rhs) noexcept { value_ += rhs.value_; return *this; }
    compute_power operator*(double factor) const;
    compute_power operator/(double divisor) const;

    friend constexpr bool operator==(compute_power, compute_power) noexcept = default;

private:
    constexpr compute_power(double v, int) noexcept : value_(v) {}
    double value_ = 0.0;
};

/// Byte count together with the prefix convention its source value used.
class data_volume {
public:
    constexpr data_volume() noexcept = default;
    static data_volume bytes(double value, byte_convention c = byte_convention::decimal);

    constexpr double bytes() const noexcept { return bytes_; }
    constexpr byte_convention convention() const noexcept { return convention_; }

    /// Value expressed in `p` units of this volume's own convention.
    double in(prefix p) const noexcept { return bytes_ / prefix_factor(p, convention_); }

    data_volume operator+(data_volume rhs) const noexcept;
    data_volume& operator+=(data_volume rhs) noexcept;
    data_volume operator*(double factor) const;
    data_volume operator/(double divisor) const;

    friend constexpr bool operator==(data_volume, data_volume) noexcept = default;

private:
    double bytes_ = 0.0;
    byte_convention convention_ = byte_convention::decimal;
};

enum class rate_dimension { events_per_second, bytes_per_second };

class rate {
public:
    constexpr rate() noexcept = default;
    static rate events_per_second(double value);
    static rate bytes_per_second(double value);

    constexpr double value() const noexcept { return value_; }
    constexpr rate_dimension dimension() const noexcept { return dimension_; }

    /// Throws validation_error on dimension mismatch.
    rate operator+(rate rhs) const;
    rate& operator+=(rate rhs);
    rate operator*(double factor) const;
    rate operator/(double divisor) const;

    friend constexpr bool operator==(rate, rate) noexcept = default;

private:
    rate(double v, rate_dimension d) noexcept : value_(v), dimension_(d) {}
    double value_ = 0.0;
    rate_dimension dimension_ = rate_dimension::events_per_second;
};

class duration {
public:
    constexpr duration() noexcept = default;
    static duration seconds(double s);
    static duration hours(double h) { return seconds(h * 3600.0); }
    static duration days(double d) { return seconds(d * 86400.0); }

    constexpr double seconds() const noexcept { return seconds_; }
    constexpr double hours() const noexcept { return seconds_ / 3600.0; }
    constexpr double days() const noexcept { return seconds_ / 86400.0; }

    duration operator+(duration rhs) const noexcept;
    duration operator*(double factor) const;

    friend constexpr bool operator==(duration, duration) noexcept = default;

private:
    double seconds_ = 0.0;
};

/// events/s x bytes/event -> bytes/s. `events` must carry the event dimension.
rate data_rate(rate events, data_volume event_size);

/// bytes/s x seconds -> bytes, tagged with `c`.
data_volume volume_over(rate bytes, duration span, byte_convention c = byte_convention::decimal);

data_volume convert_volume(double value, prefix p, byte_convention c);

/// HEPSpec06 of a machine that differs from a calibrated reference only in
/// clock frequency.
compute_power hs06_scale_by_clock(compute_power reference, double reference_clock_mhz,
                                  double target_clock_mhz);

/// Throws validation_error unless `v` is finite and >= 0.
double require_non_negative(double v, std::string_view what);
/// Throws validation_error unless `v` is finite and > 0.
double require_positive(double v, std::string_view what);
/// Throws validation_error unless 0 < v <= 1.
double require_fraction(double v, std::string_view what);

} // namespace fairplan
