#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace sic {

// A non-negative distance or the distinguished Unreachable value.
// Addition saturates at Unreachable; Unreachable orders above every finite value.
template <class T>
class basic_cost {
public:
    using value_type = T;

    constexpr basic_cost() = default;  // unreachable
    constexpr basic_cost(T value) : value_(value) {}

    static constexpr basic_cost unreachable() { return basic_cost(); }

    constexpr bool finite() const noexcept { return value_.has_value(); }
    constexpr bool is_unreachable() const noexcept { return !value_.has_value(); }

    constexpr T value() const {
        if (!value_) throw std::logic_error("value() on an unreachable cost");
        return *value_;
    }

    friend constexpr basic_cost operator+(const basic_cost& a, const basic_cost& b) {
        if (!a.value_ || !b.value_) return unreachable();
        return basic_cost(*a.value_ + *b.value_);
    }

    friend constexpr bool operator==(const basic_cost& a, const basic_cost& b) { return a.value_ == b.value_; }

    friend constexpr bool operator<(const basic_cost& a, const basic_cost& b) {
        if (!b.value_) return a.value_.has_value();
        if (!a.value_) return false;
        return *a.value_ < *b.value_;
    }
    friend constexpr bool operator>(const basic_cost& a, const basic_cost& b) { return b < a; }
    friend constexpr bool operator<=(const basic_cost& a, const basic_cost& b) { return !(b < a); }
    friend constexpr bool operator>=(const basic_cost& a, const basic_cost& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const basic_cost& c) {
        if (!c.value_) return os << "unreachable";
        return os << *c.value_;
    }

private:
    std::optional<T> value_;
};

template <class T>
constexpr basic_cost<T> min(const basic_cost<T>& a, const basic_cost<T>& b) {
    return b < a ? b : a;
}

using cost = basic_cost<std::int64_t>;
using rational = boost::rational<std::int64_t>;
using weighted_cost = basic_cost<rational>;

}  // namespace sic
