#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gca {

// Edge multiplicity: a natural number or INF. INF absorbs addition and
// compares above every finite value. Zero is representable for sums but is
// never stored as an edge multiplicity.
class Mult {
 public:
  static constexpr std::uint64_t kInfRaw = ~std::uint64_t{0};

  constexpr Mult() : raw_(0) {}
  constexpr explicit Mult(std::uint64_t n) : raw_(n) {}
  static constexpr Mult inf() { return Mult(kInfRaw); }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool is_zero() const { return raw_ == 0; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }
  constexpr std::uint64_t finite_value() const { return raw_; }

  constexpr Mult operator+(Mult o) const {
    if (is_inf() || o.is_inf()) return inf();
    return Mult(raw_ + o.raw_);
  }
  constexpr Mult& operator+=(Mult o) { return *this = *this + o; }

  // INF is the maximum, so raw comparison is the right order.
  constexpr auto operator<=>(const Mult&) const = default;

  std::string str() const { return is_inf() ? "inf" : std::to_string(raw_); }

 private:
  std::uint64_t raw_;
};

}  // namespace gca
