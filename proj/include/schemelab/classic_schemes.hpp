#pragma once
// Johnson and Hamming schemes with closed-form eigenvalues, and the folded
// subscheme of the binary Hamming scheme of odd length.

#include <cstdint>
#include <vector>

#include "schemelab/matkit.hpp"
#include "schemelab/scheme_core.hpp"

namespace schemelab {

// q-subsets of [p] in colex order; bit t of a mask is element t.
std::vector<std::uint64_t> colex_subsets(int p, int q);
// Colex rank of a q-subset mask.
std::size_t colex_rank(std::uint64_t mask);

// Entry (S,T) is 1 iff |S & T| = q - i; requires 0 <= i <= q <= p.
BinaryMatrix johnson_binary(int p, int q, int i);
RatMatrix johnson_matrix(int p, int q, int i);
AssociationScheme johnson_scheme(int p, int q);

// Eigenvalue of J_{p,q,i} on eigenspace j, 0 <= j <= min(q, p-q).
mpz_class johnson_eigenvalue(int p, int q, int i, int j);
// The same value from the alternating sum over h = i..q.
mpz_class johnson_eigenvalue_alt(int p, int q, int i, int j);
mpz_class johnson_multiplicity(int p, int j);
std::vector<std::vector<Rational>> johnson_p_matrix(int p, int q);

// Words of [p]^q as base-p integers, position 0 most significant.
BinaryMatrix hamming_binary(int p, int q, int i);
RatMatrix hamming_matrix(int p, int q, int i);
AssociationScheme hamming_scheme(int p, int q);

// Krawtchouk value sum_h (-1)^h (p-1)^(i-h) C(j,h) C(q-j,i-h).
mpz_class hamming_eigenvalue(int p, int q, int i, int j);
mpz_class hamming_multiplicity(int p, int q, int j);
std::vector<std::vector<Rational>> hamming_p_matrix(int p, int q);

struct FoldedHamming {
  int ell = 0;
  AssociationScheme scheme;  // I, B_1, ..., B_ell, P on {0,1}^(2 ell + 1); P is the antipodal map
  AxiomReport report;
  bool product_identity = false;  // B_i B_j = 2 (P + I) H_i H_j for all i, j
};

// Requires ell >= 2; throws std::logic_error if the product identity fails.
FoldedHamming folded_hamming_subscheme(int ell);

}  // namespace schemelab
