#ifndef QUIVERFORGE_SCALAR_HPP
#define QUIVERFORGE_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace qf {

// Exact field element: rational (ch == 0) or prime-field residue (ch == p).
class Scalar {
public:
  Scalar() : _ch(0), _v(0) {}
  Scalar(long n, unsigned ch = 0) : _ch(ch), _v(n) { reduce(); }
  Scalar(mpq_class v, unsigned ch = 0) : _ch(ch), _v(std::move(v)) { reduce(); }

  static Scalar zero(unsigned ch = 0) { return Scalar(0, ch); }
  static Scalar one(unsigned ch = 0) { return Scalar(1, ch); }

  unsigned characteristic() const { return _ch; }
  bool is_zero() const { return _v == 0; }
  bool is_one() const { return _v == 1; }
  mpq_class const &value() const { return _v; }

  Scalar operator+(Scalar const &o) const { return bin(o, _v + o._v); }
  Scalar operator-(Scalar const &o) const { return bin(o, _v - o._v); }
  Scalar operator*(Scalar const &o) const { return bin(o, _v * o._v); }
  Scalar operator-() const { return Scalar(-_v, _ch); }

  Scalar inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    if (_ch == 0) return Scalar(1 / _v, 0);
    mpz_class r;
    mpz_class p(_ch);
    if (!mpz_invert(r.get_mpz_t(), _v.get_num().get_mpz_t(), p.get_mpz_t()))
      throw Error("DivisionByZero", "non-invertible residue");
    return Scalar(mpq_class(r), _ch);
  }

  Scalar operator/(Scalar const &o) const { return *this * o.inverse(); }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(_ch), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(Scalar const &o) const { return _ch == o._ch && _v == o._v; }
  bool operator!=(Scalar const &o) const { return !(*this == o); }

  std::string str() const { return _v.get_str(); }

  static Scalar parse(std::string const &s, unsigned ch) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("ParseError", "bad scalar: " + s);
    v.canonicalize();
    return Scalar(v, ch);
  }

private:
  Scalar bin(Scalar const &o, mpq_class v) const {
    if (_ch != o._ch) throw Error("FieldMismatch", "mixed characteristics");
    return Scalar(std::move(v), _ch);
  }

  void reduce() {
    _v.canonicalize();
    if (_ch == 0) return;
    mpz_class p(_ch);
    mpz_class den = _v.get_den();
    mpz_class num = _v.get_num() % p;
    if (num < 0) num += p;
    if (den != 1) {
      mpz_class d = den % p, dinv;
      if (d < 0) d += p;
      if (!mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()))
        throw Error("DivisionByZero", "denominator not invertible mod p");
      num = (num * dinv) % p;
    }
    _v = mpq_class(num);
  }

  unsigned _ch;
  mpq_class _v;
};

} // namespace qf

#endif
