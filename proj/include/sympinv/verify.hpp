#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "sympinv/tensors.hpp"

namespace sympinv {

/// An element of sp(2n) as a 2n x 2n integer matrix acting on V in the basis
/// (p_1..p_n, q_1..q_n); column j holds the image of the j-th basis vector.
class LieGenerator {
 public:
  explicit LieGenerator(int n) : n_(n), entries_(4 * n * n, 0) {}

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  int& at(int row, int col) { return entries_[row * dim() + col]; }
  int at(int row, int col) const { return entries_[row * dim() + col]; }

 private:
  int n_;
  std::vector<int> entries_;
};

/// omega(Xu, v) + omega(u, Xv) == 0 for all basis u, v, i.e. X^T J + J X = 0
/// for J the matrix of the symplectic form.
bool preserves_form(const LieGenerator& x);

/// A basis of sp(2n): the n(2n+1) block matrices [[A, B], [C, -A^T]] with
/// A running over elementary matrices and B, C over symmetric elementary
/// sums. Every generator is checked against the form condition.
std::vector<LieGenerator> sp_basis(int n);

/// Leibniz action on tensor factors: the sum over slots k of applying x to
/// factor k.
SparseTensor lie_act(const LieGenerator& x, const SparseTensor& t);

/// True iff lie_act(x, t) is exactly zero for every x in sp_basis(n).
bool is_invariant(const SparseTensor& t, int n);

/// Dimension of the joint kernel of all lie_act maps on V^{tensor m},
/// computed by exact integer elimination: the diagonal rows of the Cartan
/// generators pivot away every monomial of nonzero weight, and the remaining
/// generator actions on the zero-weight monomials are reduced fraction-free.
/// Throws ResourceError when (2n)^m exceeds the budget.
long long brute_force_invariant_dim(int m, int n, long long budget = 5000);

struct CertificationReport {
  int m = 0;
  int n = 0;
  std::uint64_t graph_count = 0;
  std::uint64_t dp_count = 0;
  std::optional<std::uint64_t> brute_force_dim;
  bool all_invariant = false;
  bool triangular = false;
  bool diagonal_nonzero = false;
  bool pass = false;

  struct Timings {
    std::uint64_t build_ms = 0;
    std::uint64_t invariance_ms = 0;
    std::uint64_t triangularity_ms = 0;
    std::uint64_t brute_force_ms = 0;
    std::uint64_t total_ms = 0;
  } timings;
};

/// Builds every t_G with m vertices on n pages and certifies the basis:
/// the graph count must match the S-tris count (and the brute-force kernel
/// dimension when enabled), every t_G must be exactly invariant, and the
/// coefficient matrix with rows ordered by alpha(G) and columns by
/// b_alpha(G) must be upper triangular with nonzero diagonal.
CertificationReport certify_basis(int m, int n, bool with_brute_force,
                                  long long budget = 5000);

}  // namespace sympinv
