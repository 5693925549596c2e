#ifndef QSERIES_PARAMETER_POINT_HPP
#define QSERIES_PARAMETER_POINT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "qseries/scalar.hpp"

namespace qseries {

// Named parameter slots. s, t and z are used by the Rogers-Szego based
// entries (q-Mehler, the L-function); the rest follow the identities.
enum class Slot : std::size_t { a, b, c, d, r, u, v, x, s, t, z };

inline constexpr std::size_t kSlotCount = 11;

inline constexpr std::array<Slot, kSlotCount> kAllSlots = {
    Slot::a, Slot::b, Slot::c, Slot::d, Slot::r, Slot::u,
    Slot::v, Slot::x, Slot::s, Slot::t, Slot::z};

constexpr std::string_view slot_name(Slot s) {
  constexpr std::array<std::string_view, kSlotCount> names = {"a", "b", "c", "d", "r", "u",
                                                               "v", "x", "s", "t", "z"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<Slot> slot_from_name(std::string_view name) {
  for (Slot s : kAllSlots) {
    if (slot_name(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

/// An assignment of values to q and the named slots. Absent slots are zero.
/// theta is only meaningful in numeric mode.
template <Scalar S>
class ParameterPoint {
 public:
  explicit ParameterPoint(S q) : q_(std::move(q)) { values_.fill(zero_like(q_)); }

  const S& q() const { return q_; }
  void set_q(S q) { q_ = std::move(q); }

  const S& operator[](Slot s) const { return values_[static_cast<std::size_t>(s)]; }
  ParameterPoint& set(Slot s, S value) {
    values_[static_cast<std::size_t>(s)] = std::move(value);
    return *this;
  }
  ParameterPoint with(Slot s, S value) const {
    ParameterPoint p(*this);
    p.set(s, std::move(value));
    return p;
  }

  double theta() const { return theta_; }
  void set_theta(double theta) { theta_ = theta; }

 private:
  S q_;
  std::array<S, kSlotCount> values_;
  double theta_ = 0.0;
};

}  // namespace qseries

#endif  // QSERIES_PARAMETER_POINT_HPP
