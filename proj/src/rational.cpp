#include "hassedeg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hassedeg {

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
  return ExactRational(std::move(q));
}

double ExactRational::to_double(unsigned bits) const {
  mpf_class f(0, bits);
  f = value_;
  return f.get_d();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

}  // namespace hassedeg
