#pragma once

// Closed-form face counts for the associahedron K_n and the real moduli
// space of n+1 marked points.

#include "polycells/number.hpp"

namespace polycells {

/// A codimension-k face query on K_n (the (n+1)-gon); 2 <= n, 0 <= k <= n-2.
struct FaceQuery {
  int n;
  int k;

  void validate() const;
};

/// Faces of K_n of codimension k: (1/(k+1)) C(n+k, k) C(n-2, k).
Integer cayley_faces(FaceQuery q);
inline Integer cayley_faces(int n, int k) { return cayley_faces(FaceQuery{n, k}); }

/// Vertices of K_n, i.e. cayley_faces(n, n-2) = C(2n-2, n-1)/n.
Integer catalan(int n);

/// All faces of K_n over every codimension.
Integer schroder(int n);

/// Codim-k faces of the moduli space with n+1 points: n!/2^{k+1} * cayley_faces(n, k).
Integer moduli_faces(int n, int k);

/// (2n-3)!!
Integer binary_coupling_vertices(int n);

}  // namespace polycells
