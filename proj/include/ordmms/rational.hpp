#ifndef ORDMMS_RATIONAL_HPP
#define ORDMMS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ordmms {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace ordmms

#endif
