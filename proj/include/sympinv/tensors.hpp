#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/graphs.hpp"
#include "sympinv/words.hpp"

namespace sympinv {

enum class VecKind : std::uint8_t { P, Q };

/// A vector of the basis B_2n = (p_1, ..., p_n, q_1, ..., q_n), ordered for
/// monomial comparison as p_1 < p_2 < ... < p_n < q_n < ... < q_2 < q_1.
struct BasisVector {
  VecKind kind = VecKind::P;
  int index = 1;  // 1..n

  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

inline BasisVector p(int i) { return {VecKind::P, i}; }
inline BasisVector q(int i) { return {VecKind::Q, i}; }

/// Rank of b in the order above: p_i -> i-1, q_i -> 2n-i.
inline int basis_rank(const BasisVector& b, int n) {
  return b.kind == VecKind::P ? b.index - 1 : 2 * n - b.index;
}

std::string to_string(const BasisVector& b);                // "p1", "q3"
BasisVector parse_basis_vector(const std::string& text);    // inverse of the above

/// A basis word of V^{tensor m}: one BasisVector per slot.
using Monomial = std::vector<BasisVector>;

bool monomial_less(const Monomial& a, const Monomial& b, int n);

/// Strict weak order on monomials, lexicographic under basis_rank.
struct MonomialOrder {
  int n = 1;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(a, b, n);
  }
};

/// A permutation sigma of 1..m, stored as images[k-1] = sigma(k).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }  // sigma(k), 1-based

  /// this composed after other: (compose(other))(k) = this(other(k)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// An exact-integer linear combination of degree-m monomials over B_2n.
/// Terms are kept sorted by the monomial order, with no zero coefficients.
class SparseTensor {
 public:
  using TermMap = std::map<Monomial, mpz_class, MonomialOrder>;

  SparseTensor(int degree, int n);
  static SparseTensor unit(int n);  // the scalar 1 in degree 0

  int degree() const { return degree_; }
  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Accumulates coeff onto mono, dropping the term if it cancels to zero.
  void add_term(const Monomial& mono, const mpz_class& coeff);
  mpz_class coefficient(const Monomial& mono) const;

  SparseTensor& operator+=(const SparseTensor& other);
  SparseTensor& operator-=(const SparseTensor& other);
  SparseTensor& operator*=(const mpz_class& scalar);

  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator*(SparseTensor t, const mpz_class& s) { return t *= s; }
  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.degree_ == b.degree_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  int n_;
  TermMap terms_;
};

/// t^sigma: the factor in slot k moves to slot sigma(k); coefficients are
/// unchanged. This is the convention under which the split rule of
/// build_invariant reproduces the bookkeeping permutations of the component
/// construction; permutations are applied on the left under compose, i.e.
/// permute(permute(t, s), r) == permute(t, r.compose(s)).
SparseTensor permute(const SparseTensor& t, const Permutation& sigma);

/// a tensor b: concatenation of monomials, product of coefficients.
SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b);

/// Generalized wedge of a degree-k and a degree-(m-k) tensor: the signed sum
/// over all placements 1 <= i_1 < ... < i_k <= m of the factors of a, with
/// the factors of b filling the vacant slots in increasing order and sign
/// (-1)^{(i_1-1)+...+(i_k-k)}.
SparseTensor wedge(const SparseTensor& a, const SparseTensor& b);

/// The symplectic form omega = p_1 ^ q_1 + ... + p_n ^ q_n as a 2-tensor:
/// sum of p_i x q_i - q_i x p_i.
SparseTensor omega(int n);

/// The basis monomial b_alpha of a word: +i -> p_i, -i -> q_i, slotwise.
Monomial word_monomial(const LatticeWord& w, int n);

/// The invariant t_G of a valid wave graph: omega for a single edge,
/// omega ^ t_B for a longer path (B the graph of the inner word with every
/// letter magnitude lowered by one page), and for a disconnected graph the
/// product of the reindexed component invariants permuted back onto their
/// original vertex positions.
SparseTensor build_invariant(const WaveGraph& g, int n);

/// The least monomial with nonzero coefficient and that coefficient.
/// Throws EmptyTensorError on the zero tensor.
std::pair<Monomial, mpz_class> minimal_monomial(const SparseTensor& t);

}  // namespace sympinv
