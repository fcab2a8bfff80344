#ifndef EAG_RATIONAL_HPP
#define EAG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <complex>
#include <ostream>
#include <string>

namespace eag {

/// Exact arbitrary-precision rational. Expression templates are disabled
/// so the type behaves like a plain value inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact element of Q(i).
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    const Rational d = b.norm();
    const GaussRational n = a * b.conj();
    return {n.re / d, n.im / d};
  }
  GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
  GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
  GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
  GaussRational& operator/=(const GaussRational& b) { return *this = *this / b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
    return os << z.re << (z.im < 0 ? "" : "+") << z.im << "i";
  }
};

inline std::complex<double> to_complex(const Rational& q) { return {to_double(q), 0.0}; }
inline std::complex<double> to_complex(const GaussRational& z) {
  return {to_double(z.re), to_double(z.im)};
}
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

}  // namespace eag

namespace Eigen {

template <>
struct NumTraits<eag::Rational> : GenericNumTraits<eag::Rational> {
  using Real = eag::Rational;
  using NonInteger = eag::Rational;
  using Nested = eag::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<eag::GaussRational> : GenericNumTraits<eag::GaussRational> {
  using Real = eag::Rational;
  using NonInteger = eag::GaussRational;
  using Nested = eag::GaussRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 160
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // EAG_RATIONAL_HPP
