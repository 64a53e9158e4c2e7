/*
   Copyright 2026 the yb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef YB_RATIONAL_HPP
#define YB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "yb/errors.hpp"

namespace yb {

// Exact rational scalar, always in canonical form: positive denominator,
// gcd(|num|, den) = 1. Canonical form makes equality structural, which the
// exact verification suites rely on everywhere. Backed by GMP's mpq layer;
// every arithmetic result comes out canonical.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, scalar literals
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    // Accepts "p/q" or "p", sign on the numerator, base 10.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // Larger of numerator/denominator sizes in bits; the growth measure
    // reported along lattice trajectories.
    long bit_size() const {
        size_t n = mpz_sizeinbase(q_.get_num().get_mpz_t(), 2);
        size_t d = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
        return static_cast<long>(n > d ? n : d);
    }

    double to_double() const { return q_.get_d(); }

    std::string str() const;

  private:
    mpq_class q_;
};

inline std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw ConfigError("malformed rational literal: \"" + s + "\"");
    mpz_class n(num), d(den);
    if (d == 0) throw ConfigError("zero denominator in rational literal: \"" + s + "\"");
    return Rational(n, d);
}

// Exact square root of a perfect-square rational. Used to place points on
// the square-root leaf family while staying on the exact path.
inline Rational sqrt_exact(const Rational& r) {
    if (r.sign() < 0) throw DomainError("sqrt_exact of negative rational " + r.str());
    mpz_class n = r.numerator(), d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw DomainError("sqrt_exact of non-square rational " + r.str());
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

// Guard used by the rational maps: "is this value a forbidden divisor".
// For duals this must look only at the value part, so it is a customization
// point rather than operator==.
inline bool vanishes(const Rational& x) { return x.is_zero(); }
inline bool vanishes(double x) { return x == 0.0; }

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(double x) { return std::to_string(x); }

}  // namespace yb

#endif
