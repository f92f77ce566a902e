#include "symcubic/angle.hpp"
#include <map>
#include <stdexcept>

namespace symcubic {

mpq_class parse_fraction(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty fraction");
  // reject anything mpq's string parser would silently mangle
  for (char ch : s)
    if (!(ch == '/' || ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')))
      throw std::invalid_argument("bad fraction: '" + std::string(s) + "'");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("bad fraction: '" + std::string(s) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::string fraction_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Angle triple(const Angle& a) { return Angle(a.value() * 3); }

Angle triple_pow(const Angle& a, int k) {
  if (k < 0) throw std::invalid_argument("triple_pow: negative exponent");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(k));
  return Angle(a.value() * p);
}

Angle tau(const Angle& a) { return Angle(a.value() + mpq_class(1, 2)); }

std::array<Angle, 3> third_preimages(const Angle& a) {
  return {Angle(a.value() / 3), Angle((a.value() + 1) / 3), Angle((a.value() + 2) / 3)};
}

mpq_class arc_length(const Angle& s, const Angle& e) {
  return frac1(e.value() - s.value());
}

bool in_open_arc(const Angle& x, const Angle& s, const Angle& e) {
  mpq_class d = frac1(x.value() - s.value());
  if (d == 0) return false;
  return d < arc_length(s, e);
}

bool in_closed_arc(const Angle& x, const Angle& s, const Angle& e) {
  if (x == s || x == e) return true;
  return in_open_arc(x, s, e);
}

OrbitInfo orbit_info(const Angle& a) {
  // tripling never grows the denominator, so iterate numerators mod den
  const mpz_class den = a.value().get_den();
  mpz_class p = a.value().get_num();
  std::map<mpz_class, int> first;
  OrbitInfo info;
  int i = 0;
  for (;;) {
    auto it = first.find(p);
    if (it != first.end()) {
      info.preperiod = it->second;
      info.period = i - it->second;
      return info;
    }
    first.emplace(p, i);
    mpq_class q(p, den);
    q.canonicalize();
    info.path.push_back(Angle(std::move(q)));
    p = (p * 3) % den;
    ++i;
  }
}

double to_double(const Angle& a) { return a.value().get_d(); }

} // namespace symcubic
