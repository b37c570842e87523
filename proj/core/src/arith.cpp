#include "gofk/arith.hpp"

#include <cstdlib>
#include <string>

#include "gofk/error.hpp"

namespace gofk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidFraction: return "invalid-fraction";
    case ErrorKind::kOddFormRequired: return "odd-form-required";
    case ErrorKind::kDegenerateContinuedFraction: return "degenerate-continued-fraction";
    case ErrorKind::kInvalidSlope: return "invalid-slope";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kOverflow: return "overflow";
  }
  return "unknown";
}

namespace arith {

namespace {

[[noreturn]] void overflow(const char* op, Int a, Int b) {
  throw Error(ErrorKind::kOverflow, std::string("integer overflow in ") + op + "(" +
                                        std::to_string(a) + ", " + std::to_string(b) + ")");
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add", a, b);
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub", a, b);
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul", a, b);
  return r;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int inverse_mod(Int a, Int m) {
  if (m == 1) return 0;
  // extended Euclid on (a mod m, m)
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int quot = old_r / r;
    Int t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return -1;
  return mod(old_s, m);
}

}  // namespace arith
}  // namespace gofk
