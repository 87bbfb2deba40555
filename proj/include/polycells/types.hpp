#pragma once

// Face types: the multiset of cell sizes of a dissection, equivalently a
// partition of n-1 into k+1 parts for a codim-k face of K_n.

#include <map>
#include <string>
#include <vector>

#include "polycells/number.hpp"

namespace polycells {

/// Cell size i (>= 3) -> number of i-sided cells m_i (>= 1).
class TypeSignature {
 public:
  TypeSignature() = default;
  explicit TypeSignature(std::map<int, int> multiplicities);

  /// Signature of a partition of n-1; part p is a cell with p+2 sides.
  static TypeSignature from_partition(const std::vector<int>& parts);
  /// Parses "<3^2:4:6>"; throws std::invalid_argument on malformed input.
  static TypeSignature parse(const std::string& text);

  const std::map<int, int>& multiplicities() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  int cell_count() const;
  /// k = (sum m_i) - 1
  int codim() const { return cell_count() - 1; }
  /// n = 1 + sum (i-2) m_i, so the host polygon has n+1 sides.
  int host_n() const;
  int polygon_sides() const { return host_n() + 1; }
  /// Indices j of the product K_{j_1} x ... x K_{j_{k+1}}, largest first.
  std::vector<int> factorization() const;
  std::string factorization_string() const;
  /// Bracket notation with unit exponents and absent sizes omitted, e.g. "<3^2:4:6>".
  std::string to_string() const;

  friend auto operator<=>(const TypeSignature&, const TypeSignature&) = default;

 private:
  std::map<int, int> mult_;
};

/// Partitions of n into exactly k positive parts: p_k(n) = p_{k-1}(n-1) + p_k(n-k).
Integer partition_count(int n, int k);

/// Partitions of n into exactly k parts, each listed largest part first,
/// in lexicographically decreasing order.
std::vector<std::vector<int>> partitions_into_parts(int n, int k);

/// One signature per partition of n-1 into k+1 parts, in the order above.
std::vector<TypeSignature> type_signatures(int n, int k);

/// Faces of K_n of this type: (1/(k+1)) C(n+k, k) (sum m_i)! / prod m_i!.
Integer type_face_count(const TypeSignature& sig);

}  // namespace polycells
