#pragma once
#include "symcubic/rational.hpp"
#include <array>
#include <vector>

namespace symcubic {

// Point of the circle R/Z, kept reduced in [0,1).
class Angle {
public:
  Angle() : v_(0) {}
  explicit Angle(mpq_class q) : v_(frac1(std::move(q))) {}
  // the two-integer mpq ctor skips canonicalization, which mpq_equal assumes
  Angle(long num, long den) : v_(frac1(canonical(num, den))) {}

  static Angle parse(std::string_view s) { return Angle(parse_fraction(s)); }

  const mpq_class& value() const { return v_; }
  std::string str() const { return fraction_str(v_); }

  Angle plus(const mpq_class& d) const { return Angle(v_ + d); }

  friend bool operator==(const Angle& x, const Angle& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Angle& x, const Angle& y) { return x.v_ != y.v_; }
  friend bool operator<(const Angle& x, const Angle& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Angle& x, const Angle& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Angle& x, const Angle& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Angle& x, const Angle& y) { return x.v_ >= y.v_; }

private:
  mpq_class v_;
};

Angle triple(const Angle& a);                    // a -> 3a
Angle triple_pow(const Angle& a, int k);         // a -> 3^k a
Angle tau(const Angle& a);                       // half turn
std::array<Angle, 3> third_preimages(const Angle& a);

// ccw arc helpers; arcs are given as (start, end) counterclockwise
mpq_class arc_length(const Angle& s, const Angle& e);   // in [0,1)
bool in_open_arc(const Angle& x, const Angle& s, const Angle& e);
bool in_closed_arc(const Angle& x, const Angle& s, const Angle& e);

struct OrbitInfo {
  int preperiod = 0;          // steps before the orbit enters its cycle
  int period = 0;
  std::vector<Angle> path;    // the preperiod+period distinct points, in order
};
OrbitInfo orbit_info(const Angle& a);

double to_double(const Angle& a);

} // namespace symcubic
