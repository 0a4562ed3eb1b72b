#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace superrep {

// Error hierarchy. The CLI maps these onto exit codes: validation
// failures -> 2, undecided/budget -> 3.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct validation_error : error {
  using error::error;
};
// A windowed test could not decide (soundness over completeness).
struct undecided_error : error {
  using error::error;
};
struct budget_error : undecided_error {
  using undecided_error::undecided_error;
};
struct unsupported_field_error : undecided_error {
  using undecided_error::undecided_error;
};
// Something that is provably impossible for valid inputs happened.
struct internal_error : error {
  using error::error;
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Ground field: the rationals, or a prime field F_p with p an odd prime.
// Characteristic 2 is rejected everywhere.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  long p = 0;

  // F_2 is constructible for the representation-counting oracle; the
  // graded-algebra layer separately rejects characteristic 2, which the
  // whole graded theory here assumes away.
  static Field Q() { return Field{Kind::rationals, 0}; }
  static Field Fp(long p) {
    if (!is_prime(p)) throw validation_error("Fp requires a prime modulus, got " + std::to_string(p));
    return Field{Kind::prime, p};
  }

  bool has_char_2() const { return kind == Kind::prime && p == 2; }

  bool is_rational() const { return kind == Kind::rationals; }
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p);
  }
  static Field parse(const std::string& s) {
    if (s == "Q" || s == "q") return Q();
    if (s.rfind("Fp:", 0) == 0) return Fp(std::stol(s.substr(3)));
    if (s.rfind("F", 0) == 0 && s.size() > 1 && isdigit(s[1])) return Fp(std::stol(s.substr(1)));
    throw validation_error("cannot parse field '" + s + "' (expected Q or Fp:<p>)");
  }
};

// Exact scalar: a rational number, or an element of F_p. All arithmetic in
// the artifact goes through this type; there is no floating point anywhere.
class Scalar {
 public:
  Scalar() : f_(Field::Q()), q_(0), r_(0) {}
  static Scalar zero(const Field& f) { return of_long(f, 0); }
  static Scalar one(const Field& f) { return of_long(f, 1); }
  static Scalar of_long(const Field& f, long v) {
    Scalar s;
    s.f_ = f;
    if (f.is_rational()) {
      s.q_ = v;
    } else {
      s.r_ = v % f.p;
      if (s.r_ < 0) s.r_ += f.p;
    }
    return s;
  }
  static Scalar of_rational(const Field& f, const mpq_class& q) {
    if (f.is_rational()) {
      Scalar s;
      s.f_ = f;
      s.q_ = q;
      s.q_.canonicalize();
      return s;
    }
    // Reduce a rational into F_p; the denominator must be invertible.
    Scalar num = of_mpz(f, q.get_num());
    Scalar den = of_mpz(f, q.get_den());
    return num / den;
  }
  static Scalar of_mpz(const Field& f, const mpz_class& z) {
    if (f.is_rational()) return of_rational(f, mpq_class(z));
    mpz_class r = z % f.p;
    long v = r.get_si();
    return of_long(f, v);
  }
  static Scalar parse(const Field& f, const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw validation_error("cannot parse scalar '" + text + "'");
    if (q.get_den() == 0) throw validation_error("scalar '" + text + "' has a zero denominator");
    q.canonicalize();
    return of_rational(f, q);
  }

  const Field& field() const { return f_; }
  bool is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }
  bool is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

  Scalar operator-() const {
    Scalar s = *this;
    if (f_.is_rational())
      s.q_ = -q_;
    else
      s.r_ = r_ == 0 ? 0 : f_.p - r_;
    return s;
  }
  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s = *this;
    if (f_.is_rational())
      s.q_ += o.q_;
    else
      s.r_ = (r_ + o.r_) % f_.p;
    return s;
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s = *this;
    if (f_.is_rational())
      s.q_ *= o.q_;
    else
      s.r_ = mulmod(r_, o.r_, f_.p);
    return s;
  }
  Scalar inverse() const {
    if (is_zero()) throw validation_error("division by zero scalar");
    Scalar s = *this;
    if (f_.is_rational()) {
      s.q_ = 1 / q_;
    } else {
      s.r_ = invmod(r_, f_.p);
    }
    return s;
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    check(o);
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact rational square root when one exists.
  bool sqrt(Scalar& out) const {
    if (f_.is_rational()) {
      if (q_ < 0) return false;
      mpz_class num = q_.get_num(), den = q_.get_den();
      if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      out = of_rational(f_, mpq_class(rn, rd));
      return true;
    }
    for (long x = 0; x < f_.p; ++x)
      if (mulmod(x, x, f_.p) == r_) {
        out = of_long(f_, x);
        return true;
      }
    return false;
  }

  std::string str() const {
    if (f_.is_rational()) return q_.get_str();
    return std::to_string(r_);
  }
  const mpq_class& rational() const { return q_; }
  long residue() const { return r_; }

 private:
  void check(const Scalar& o) const {
    if (f_ != o.f_) throw validation_error("mixed-field scalar arithmetic");
  }
  static long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
  }
  static long invmod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long q = r / nr;
      long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw internal_error("invmod: not invertible");
    return t < 0 ? t + p : t;
  }

  Field f_;
  mpq_class q_;
  long r_;
};

}  // namespace superrep
