#pragma once

// Truncated formal power series with exact rational coefficients.
//
// BivariateSeries carries the cluster generating functions in x (cells) and
// y (outside edges). MultivariateSeries carries the tree series in
// x, t1, t3, t4, ... . Both are plain values: every operation returns a new
// series and never mutates its arguments.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycells/number.hpp"

namespace polycells {

struct SeriesBounds {
  int max_cell_deg = 14;
  int max_edge_deg = 16;

  friend bool operator==(const SeriesBounds&, const SeriesBounds&) = default;
};

class BivariateSeries {
 public:
  explicit BivariateSeries(SeriesBounds bounds = {});

  static BivariateSeries zero(SeriesBounds bounds) { return BivariateSeries(bounds); }
  static BivariateSeries one(SeriesBounds bounds);
  static BivariateSeries x(SeriesBounds bounds);
  static BivariateSeries y(SeriesBounds bounds);
  /// c * x^m y^n, or zero when the monomial lies beyond the bounds.
  static BivariateSeries monomial(SeriesBounds bounds, int m, int n, const Rational& c);

  const SeriesBounds& bounds() const { return bounds_; }
  int max_cell_deg() const { return bounds_.max_cell_deg; }
  int max_edge_deg() const { return bounds_.max_edge_deg; }

  /// Throws std::out_of_range when (m, n) is outside the truncation window,
  /// so a truncated coefficient is never mistaken for a true zero.
  const Rational& coefficient(int m, int n) const;
  void set_coefficient(int m, int n, const Rational& value);

  bool is_zero() const;
  bool is_integral() const;
  bool has_negative_coefficient() const;
  /// Nonzero terms as ((m, n), coefficient), ordered by m then n.
  std::vector<std::pair<std::pair<int, int>, Rational>> terms() const;
  std::string to_string() const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  BivariateSeries& operator*=(const Rational& scalar);

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  std::size_t index(int m, int n) const {
    return static_cast<std::size_t>(m) * (bounds_.max_edge_deg + 1) + n;
  }
  void require_same_bounds(const BivariateSeries& other) const;

  SeriesBounds bounds_;
  std::vector<Rational> coeffs_;

  friend BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries power_substitute(const BivariateSeries& s, int r);
  friend BivariateSeries geom_reciprocal(const BivariateSeries& s);
};

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries scale(const BivariateSeries& s, const Rational& c);
/// 1 - s
BivariateSeries one_minus(const BivariateSeries& s);
/// 1 + s + s^2 + ... ; requires a zero constant term.
BivariateSeries geom_reciprocal(const BivariateSeries& s);
/// x^m y^n -> x^{rm} y^{rn}; requires r >= 1.
BivariateSeries power_substitute(const BivariateSeries& s, int r);
BivariateSeries pow(const BivariateSeries& s, int e);

inline BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) { return add(a, b); }
inline BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) { return sub(a, b); }
inline BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) { return mul(a, b); }
inline BivariateSeries operator*(const Rational& c, const BivariateSeries& s) { return scale(s, c); }

// ---------------------------------------------------------------------------

/// Exponent vector packed four bits per variable; at most 16 variables, each
/// of degree at most 15.
using Monomial = std::uint64_t;

class MultivariateSeries {
 public:
  static constexpr int kMaxVariables = 16;
  static constexpr int kMaxDegree = 15;

  /// One bound per variable, in the order given.
  MultivariateSeries(std::vector<std::string> variables, std::vector<int> max_degrees);

  static MultivariateSeries one_like(const MultivariateSeries& shape);
  static MultivariateSeries zero_like(const MultivariateSeries& shape);
  /// The series consisting of the single variable `name`.
  static MultivariateSeries variable_like(const MultivariateSeries& shape, const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<int>& max_degrees() const { return max_degrees_; }
  int variable_index(const std::string& name) const;

  /// Throws std::out_of_range for exponents beyond the bounds or of the wrong arity.
  Rational coefficient(const std::vector<int>& exponents) const;
  void set_coefficient(const std::vector<int>& exponents, const Rational& value);

  const std::map<Monomial, Rational>& packed_terms() const { return coeffs_; }
  std::vector<int> unpack(Monomial m) const;
  bool fits(const std::vector<int>& exponents) const;
  bool is_integral() const;
  bool same_shape(const MultivariateSeries& other) const;

  MultivariateSeries& operator+=(const MultivariateSeries& other);
  MultivariateSeries& operator-=(const MultivariateSeries& other);
  MultivariateSeries& operator*=(const Rational& scalar);

  friend bool operator==(const MultivariateSeries& a, const MultivariateSeries& b);

 private:
  Monomial pack(const std::vector<int>& exponents) const;
  bool fits_packed(Monomial m) const;
  void require_same_shape(const MultivariateSeries& other) const;
  void prune();

  std::vector<std::string> variables_;
  std::vector<int> max_degrees_;
  std::map<Monomial, Rational> coeffs_;

  friend MultivariateSeries mul(const MultivariateSeries& a, const MultivariateSeries& b);
  friend MultivariateSeries power_substitute(const MultivariateSeries& s, int r);
};

MultivariateSeries add(const MultivariateSeries& a, const MultivariateSeries& b);
MultivariateSeries sub(const MultivariateSeries& a, const MultivariateSeries& b);
MultivariateSeries mul(const MultivariateSeries& a, const MultivariateSeries& b);
MultivariateSeries scale(const MultivariateSeries& s, const Rational& c);
/// Raises every variable to the r-th power.
MultivariateSeries power_substitute(const MultivariateSeries& s, int r);

inline MultivariateSeries operator+(const MultivariateSeries& a, const MultivariateSeries& b) { return add(a, b); }
inline MultivariateSeries operator-(const MultivariateSeries& a, const MultivariateSeries& b) { return sub(a, b); }
inline MultivariateSeries operator*(const MultivariateSeries& a, const MultivariateSeries& b) { return mul(a, b); }
inline MultivariateSeries operator*(const Rational& c, const MultivariateSeries& s) { return scale(s, c); }

// Shape helpers used by generic code (plethysm).
inline BivariateSeries unit_like(const BivariateSeries& s) { return BivariateSeries::one(s.bounds()); }
inline BivariateSeries zero_like(const BivariateSeries& s) { return BivariateSeries::zero(s.bounds()); }
inline MultivariateSeries unit_like(const MultivariateSeries& s) { return MultivariateSeries::one_like(s); }
inline MultivariateSeries zero_like(const MultivariateSeries& s) { return MultivariateSeries::zero_like(s); }

}  // namespace polycells
