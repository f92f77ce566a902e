#pragma once
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace symcubic {

inline mpq_class canonical(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// x mod 1, result in [0,1)
inline mpq_class frac1(mpq_class x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (fl != 0) x -= fl;
  return x;
}

// "p/q" or "p"; sign and unreduced input accepted
mpq_class parse_fraction(std::string_view s);

std::string fraction_str(const mpq_class& q);

} // namespace symcubic
