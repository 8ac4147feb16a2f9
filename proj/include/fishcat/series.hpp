#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fishcat/error.hpp"

namespace fishcat {

using BigInt = boost::multiprecision::cpp_int;

enum class Var { X = 0, Y = 1, Z = 2 };

// Exact polynomial in x, y, z with arbitrary-precision integer coefficients,
// stored as a sparse map from exponent triples to coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(BigInt constant);
    static Poly var(Var v, int exp = 1);
    static Poly monomial(int ex, int ey, int ez, BigInt coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int ex, int ey, int ez) const;

    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator*(const Poly&) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }

    // Substitute 1 for one variable (exponent dropped, like terms merged).
    Poly at_one(Var v) const;
    // Swap two variables.
    Poly swapped(Var a, Var b) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;
    const std::map<std::array<int, 3>, BigInt>& terms() const { return terms_; }
    void add_term(const std::array<int, 3>& e, const BigInt& c);

  private:
    std::map<std::array<int, 3>, BigInt> terms_;
};

// Power series in t truncated at max_order, with Poly coefficients; all
// arithmetic exact and never reading past the truncation order.
class Series {
  public:
    explicit Series(int max_order) : coeff_(max_order + 1) {}
    static Series zero(int max_order) { return Series(max_order); }
    static Series constant(const Poly& p, int max_order);
    static Series one(int max_order) { return constant(Poly(1), max_order); }

    int max_order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Poly& coeff(int d) const { return coeff_.at(d); }
    Poly& coeff(int d) { return coeff_.at(d); }

    Series operator+(const Series&) const;
    Series operator-(const Series&) const;
    Series operator*(const Series&) const;
    // Multiplication by t^k.
    Series shifted(int k) const;
    Series scaled(const Poly& p) const;

    // Multiplicative inverse; requires the order-0 coefficient to be the
    // constant 1 or -1. Throws NonUnitConstantTerm.
    Series reciprocal() const;

    Series at_one(Var v) const;
    Series swapped(Var a, Var b) const;

    friend bool operator==(const Series&, const Series&) = default;

    std::string str() const;
    // {"0": {...}, "1": {...}} with per-degree monomial -> coefficient maps.
    std::string json() const;

  private:
    std::vector<Poly> coeff_;
};

inline constexpr int kDefaultOrder = 12;

// C(t): Catalan numbers via the convolution recurrence.
Series catalan_series(int max_order = kDefaultOrder);

// N(x,t) with constant term 1, from N = 1 + t(x-1)N + tN^2.
Series narayana_series(int max_order = kDefaultOrder);

// Ballot-number triangle generating function C(v,t) = 1/(1 - v t C(t)).
Series ballot_series(Var v, int max_order = kDefaultOrder);

// sum_{n>=0} prod_{k=1..n} (1 - (1-t)^k), truncated exactly.
Series fishburn_series(int max_order = kDefaultOrder);

// 1 + yzt C(y,t) C(z,t): the joint (fcr, bl) closed form.
Series ballot_pair_closed_form(int max_order = kDefaultOrder);

// 1 + xyzt / ((1 - ytN(x,t)) (1 - zt(N(x,t)+x-1))): the joint (mcr, fcr, bl)
// closed form.
Series triple_joint_closed_form(int max_order = kDefaultOrder);

// One item per object: {size, x-exponent, y-exponent, z-exponent}.
Series distribution_series(const std::vector<std::array<int, 4>>& items, int max_order);

}  // namespace fishcat
