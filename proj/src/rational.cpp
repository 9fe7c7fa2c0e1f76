#include "linkinv/rational.hpp"

namespace linkinv {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_integer(const Rational& q) {
  return q.get_den() == 1 || q.get_den() == 2;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r;
  Integer am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

}  // namespace linkinv
