#include "polycells/series.hpp"

#include <sstream>
#include <stdexcept>

namespace polycells {

BivariateSeries::BivariateSeries(SeriesBounds bounds) : bounds_(bounds) {
  if (bounds.max_cell_deg < 0 || bounds.max_edge_deg < 0)
    throw std::invalid_argument("series bounds must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(bounds.max_cell_deg + 1) * (bounds.max_edge_deg + 1));
}

BivariateSeries BivariateSeries::one(SeriesBounds bounds) { return monomial(bounds, 0, 0, 1); }
BivariateSeries BivariateSeries::x(SeriesBounds bounds) { return monomial(bounds, 1, 0, 1); }
BivariateSeries BivariateSeries::y(SeriesBounds bounds) { return monomial(bounds, 0, 1, 1); }

BivariateSeries BivariateSeries::monomial(SeriesBounds bounds, int m, int n, const Rational& c) {
  BivariateSeries s(bounds);
  if (m < 0 || n < 0) throw std::invalid_argument("negative exponent");
  if (m <= bounds.max_cell_deg && n <= bounds.max_edge_deg) s.coeffs_[s.index(m, n)] = c;
  return s;
}

const Rational& BivariateSeries::coefficient(int m, int n) const {
  if (m < 0 || n < 0 || m > bounds_.max_cell_deg || n > bounds_.max_edge_deg) {
    std::ostringstream msg;
    msg << "coefficient (" << m << ", " << n << ") is beyond the truncation bounds ("
        << bounds_.max_cell_deg << ", " << bounds_.max_edge_deg << ")";
    throw std::out_of_range(msg.str());
  }
  return coeffs_[index(m, n)];
}

void BivariateSeries::set_coefficient(int m, int n, const Rational& value) {
  coefficient(m, n);  // bounds check
  coeffs_[index(m, n)] = value;
}

bool BivariateSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool BivariateSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool BivariateSeries::has_negative_coefficient() const {
  for (const auto& c : coeffs_)
    if (c < 0) return true;
  return false;
}

std::vector<std::pair<std::pair<int, int>, Rational>> BivariateSeries::terms() const {
  std::vector<std::pair<std::pair<int, int>, Rational>> out;
  for (int m = 0; m <= bounds_.max_cell_deg; ++m)
    for (int n = 0; n <= bounds_.max_edge_deg; ++n)
      if (const auto& c = coeffs_[index(m, n)]; c != 0) out.push_back({{m, n}, c});
  return out;
}

std::string BivariateSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [mn, c] : terms()) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*x^" << mn.first << "*y^" << mn.second;
  }
  if (first) out << "0";
  return out.str();
}

void BivariateSeries::require_same_bounds(const BivariateSeries& other) const {
  if (!(bounds_ == other.bounds_))
    throw std::invalid_argument("series truncation bounds do not match");
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  require_same_bounds(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  require_same_bounds(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.bounds_ == b.bounds_ && a.coeffs_ == b.coeffs_;
}

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r = a;
  r += b;
  return r;
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r = a;
  r -= b;
  return r;
}

BivariateSeries scale(const BivariateSeries& s, const Rational& c) {
  BivariateSeries r = s;
  r *= c;
  return r;
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
  a.require_same_bounds(b);
  const int M = a.max_cell_deg();
  const int N = a.max_edge_deg();
  BivariateSeries r(a.bounds());
  const auto rhs = b.terms();
  Rational prod;
  for (int m1 = 0; m1 <= M; ++m1) {
    for (int n1 = 0; n1 <= N; ++n1) {
      const Rational& c1 = a.coeffs_[a.index(m1, n1)];
      if (c1 == 0) continue;
      for (const auto& [mn, c2] : rhs) {
        const int m = m1 + mn.first;
        const int n = n1 + mn.second;
        if (m > M || n > N) continue;
        prod = c1 * c2;
        r.coeffs_[r.index(m, n)] += prod;
      }
    }
  }
  return r;
}

BivariateSeries one_minus(const BivariateSeries& s) {
  return sub(BivariateSeries::one(s.bounds()), s);
}

BivariateSeries geom_reciprocal(const BivariateSeries& s) {
  if (s.coefficient(0, 0) != 0)
    throw std::domain_error("geom_reciprocal requires a zero constant term");
  // g = 1 + s*g, solved coefficient by coefficient in lexicographic order of
  // (m, n); every term of s*g at (m, n) only involves earlier coefficients of g.
  const int M = s.max_cell_deg();
  const int N = s.max_edge_deg();
  BivariateSeries g(s.bounds());
  const auto st = s.terms();
  for (int m = 0; m <= M; ++m) {
    for (int n = 0; n <= N; ++n) {
      Rational acc = (m == 0 && n == 0) ? 1 : 0;
      for (const auto& [ij, c] : st) {
        if (ij.first > m || ij.second > n) continue;
        acc += c * g.coeffs_[g.index(m - ij.first, n - ij.second)];
      }
      g.coeffs_[g.index(m, n)] = acc;
    }
  }
  return g;
}

BivariateSeries power_substitute(const BivariateSeries& s, int r) {
  if (r <= 0) throw std::invalid_argument("power_substitute requires r >= 1");
  BivariateSeries out(s.bounds());
  for (int m = 0; m * r <= s.max_cell_deg(); ++m)
    for (int n = 0; n * r <= s.max_edge_deg(); ++n)
      out.coeffs_[out.index(m * r, n * r)] = s.coeffs_[s.index(m, n)];
  return out;
}

BivariateSeries pow(const BivariateSeries& s, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  BivariateSeries result = BivariateSeries::one(s.bounds());
  BivariateSeries base = s;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------

MultivariateSeries::MultivariateSeries(std::vector<std::string> variables,
                                       std::vector<int> max_degrees)
    : variables_(std::move(variables)), max_degrees_(std::move(max_degrees)) {
  if (variables_.size() != max_degrees_.size())
    throw std::invalid_argument("one truncation bound per variable is required");
  if (variables_.empty() || static_cast<int>(variables_.size()) > kMaxVariables)
    throw std::invalid_argument("between 1 and 16 variables are supported");
  for (int d : max_degrees_)
    if (d < 0 || d > kMaxDegree)
      throw std::invalid_argument("variable degree bounds must lie in [0, 15]");
}

MultivariateSeries MultivariateSeries::one_like(const MultivariateSeries& shape) {
  MultivariateSeries s(shape.variables_, shape.max_degrees_);
  s.coeffs_[0] = 1;
  return s;
}

MultivariateSeries MultivariateSeries::zero_like(const MultivariateSeries& shape) {
  return MultivariateSeries(shape.variables_, shape.max_degrees_);
}

MultivariateSeries MultivariateSeries::variable_like(const MultivariateSeries& shape,
                                                     const std::string& name) {
  MultivariateSeries s(shape.variables_, shape.max_degrees_);
  std::vector<int> e(shape.variables_.size(), 0);
  e[shape.variable_index(name)] = 1;
  if (s.fits(e)) s.coeffs_[s.pack(e)] = 1;
  return s;
}

int MultivariateSeries::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  throw std::out_of_range("unknown series variable '" + name + "'");
}

Monomial MultivariateSeries::pack(const std::vector<int>& e) const {
  Monomial m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) m |= static_cast<Monomial>(e[i]) << (4 * i);
  return m;
}

std::vector<int> MultivariateSeries::unpack(Monomial m) const {
  std::vector<int> e(variables_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>((m >> (4 * i)) & 0xF);
  return e;
}

bool MultivariateSeries::fits(const std::vector<int>& e) const {
  if (e.size() != variables_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > max_degrees_[i]) return false;
  return true;
}

bool MultivariateSeries::fits_packed(Monomial m) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (static_cast<int>((m >> (4 * i)) & 0xF) > max_degrees_[i]) return false;
  return true;
}

Rational MultivariateSeries::coefficient(const std::vector<int>& e) const {
  if (!fits(e)) throw std::out_of_range("exponent vector is beyond the truncation bounds");
  auto it = coeffs_.find(pack(e));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void MultivariateSeries::set_coefficient(const std::vector<int>& e, const Rational& value) {
  if (!fits(e)) throw std::out_of_range("exponent vector is beyond the truncation bounds");
  if (value == 0)
    coeffs_.erase(pack(e));
  else
    coeffs_[pack(e)] = value;
}

bool MultivariateSeries::is_integral() const {
  for (const auto& [m, c] : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool MultivariateSeries::same_shape(const MultivariateSeries& other) const {
  return variables_ == other.variables_ && max_degrees_ == other.max_degrees_;
}

void MultivariateSeries::require_same_shape(const MultivariateSeries& other) const {
  if (!same_shape(other)) throw std::invalid_argument("series truncation bounds do not match");
}

void MultivariateSeries::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

MultivariateSeries& MultivariateSeries::operator+=(const MultivariateSeries& other) {
  require_same_shape(other);
  for (const auto& [m, c] : other.coeffs_) coeffs_[m] += c;
  prune();
  return *this;
}

MultivariateSeries& MultivariateSeries::operator-=(const MultivariateSeries& other) {
  require_same_shape(other);
  for (const auto& [m, c] : other.coeffs_) coeffs_[m] -= c;
  prune();
  return *this;
}

MultivariateSeries& MultivariateSeries::operator*=(const Rational& scalar) {
  for (auto& [m, c] : coeffs_) c *= scalar;
  prune();
  return *this;
}

bool operator==(const MultivariateSeries& a, const MultivariateSeries& b) {
  return a.same_shape(b) && a.coeffs_ == b.coeffs_;
}

MultivariateSeries add(const MultivariateSeries& a, const MultivariateSeries& b) {
  MultivariateSeries r = a;
  r += b;
  return r;
}

MultivariateSeries sub(const MultivariateSeries& a, const MultivariateSeries& b) {
  MultivariateSeries r = a;
  r -= b;
  return r;
}

MultivariateSeries scale(const MultivariateSeries& s, const Rational& c) {
  MultivariateSeries r = s;
  r *= c;
  return r;
}

MultivariateSeries mul(const MultivariateSeries& a, const MultivariateSeries& b) {
  a.require_same_shape(b);
  MultivariateSeries r = MultivariateSeries::zero_like(a);
  const std::size_t nv = a.variables_.size();
  Rational prod;
  for (const auto& [ma, ca] : a.coeffs_) {
    for (const auto& [mb, cb] : b.coeffs_) {
      // Fieldwise sum with an overflow/bound check per 4-bit lane.
      Monomial sum = 0;
      bool ok = true;
      for (std::size_t i = 0; i < nv; ++i) {
        const int d = static_cast<int>(((ma >> (4 * i)) & 0xF) + ((mb >> (4 * i)) & 0xF));
        if (d > a.max_degrees_[i]) {
          ok = false;
          break;
        }
        sum |= static_cast<Monomial>(d) << (4 * i);
      }
      if (!ok) continue;
      prod = ca * cb;
      r.coeffs_[sum] += prod;
    }
  }
  r.prune();
  return r;
}

MultivariateSeries power_substitute(const MultivariateSeries& s, int r) {
  if (r <= 0) throw std::invalid_argument("power_substitute requires r >= 1");
  MultivariateSeries out = MultivariateSeries::zero_like(s);
  for (const auto& [m, c] : s.coeffs_) {
    auto e = s.unpack(m);
    for (auto& d : e) d *= r;
    if (out.fits(e)) out.coeffs_[out.pack(e)] = c;
  }
  return out;
}

}  // namespace polycells
