#pragma once

#include <stdexcept>
#include <string>

namespace austere {

// Base field of the matrix algebra. m = dim_R(F) drives every dimension count.
enum class Field { Real, Complex, Quaternion };

constexpr int real_dim(Field f) {
  switch (f) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quaternion: return 4;
  }
  return 0;
}

inline const char* field_name(Field f) {
  switch (f) {
    case Field::Real: return "R";
    case Field::Complex: return "C";
    case Field::Quaternion: return "H";
  }
  return "?";
}

inline Field parse_field(const std::string& s) {
  if (s == "R" || s == "r" || s == "real") return Field::Real;
  if (s == "C" || s == "c" || s == "complex") return Field::Complex;
  if (s == "H" || s == "h" || s == "quaternion") return Field::Quaternion;
  throw std::invalid_argument("unknown field '" + s + "' (expected R, C or H)");
}

// dim_R of the traceless Hermitian matrices over F: n(n-1)m/2 + n - 1.
inline int ambient_dim(int n, Field f) {
  if (n < 2) throw std::invalid_argument("ambient_dim requires n >= 2");
  return n * (n - 1) * real_dim(f) / 2 + n - 1;
}

}  // namespace austere
