#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace dps {

// Exact half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int v) : twice_(2 * static_cast<std::int64_t>(v)) {}
    constexpr HalfInt(long v) : twice_(2 * static_cast<std::int64_t>(v)) {}
    constexpr HalfInt(long long v) : twice_(2 * static_cast<std::int64_t>(v)) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    // smallest integer >= value
    constexpr std::int64_t ceil() const {
        if (twice_ >= 0) return (twice_ + 1) / 2;
        return -((-twice_) / 2);
    }
    constexpr std::int64_t floor() const { return -from_twice(-twice_).ceil(); }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr bool operator==(const HalfInt&) const = default;

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    // True when this - o is an integer.
    constexpr bool same_class(HalfInt o) const { return ((twice_ - o.twice_) % 2) == 0; }

    // "3/2", "-1/2", "2"
    std::string str() const;

    // Accepts "p/2", "p/1", "p" with optional sign; throws std::invalid_argument.
    static HalfInt parse(std::string_view s);

private:
    std::int64_t twice_ = 0;
};

// (a+b)/2 where a-b is an integer; throws if the result is not a half-integer.
HalfInt midpoint(HalfInt a, HalfInt b);

}  // namespace dps

template <>
struct std::hash<dps::HalfInt> {
    std::size_t operator()(dps::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.twice()); }
};
