#include "zipmot/rational.hpp"

#include <ostream>

#include "zipmot/error.hpp"

namespace zipmot {

Rational::Rational(long long num, long long den) {
  require(den != 0, "rational with zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  require(!s.empty(), "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw PreconditionError("malformed rational literal: '" + s + "'");
  require(sgn(mpq_class(q.get_den())) != 0, "rational literal with zero denominator: '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

long long Rational::to_int() const {
  ensure(is_integer(), "rational " + str() + " is not an integer");
  const mpz_class n = numerator();
  ensure(n.fits_slong_p(), "integer out of machine range: " + str());
  return n.get_si();
}

Rational Rational::inverse() const {
  require(!is_zero(), "division by zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), v_.get_mpq_t());
  return Rational(inv);
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace zipmot
