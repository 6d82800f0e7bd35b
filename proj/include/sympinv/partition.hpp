#pragma once

#include <gmpxx.h>

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace sympinv {

/// A partition stored as weakly decreasing positive column heights, left to
/// right; the empty sequence is the empty partition. Read as an S-tris board
/// state on a board of width n whenever length() <= n.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// |lambda|, the total number of boxes.
  int weight() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// Board states reachable from mu by one S-tris move on a width-n board:
/// drop a 1x1 block onto some column, or raise the top block of some column
/// off the board. Complete rows are never cleared. Every result is again a
/// partition of length <= n.
std::set<Partition> stris_moves(const Partition& mu, int n);

/// Number of S-tris game histories of length m that end at board lambda on a
/// width-n board; equivalently the multiplicity of the irreducible component
/// labelled by lambda in the m-th tensor power of the defining
/// representation. Zero when |lambda| > m or |lambda| != m (mod 2).
mpz_class multiplicity(const Partition& lambda, int m, int n);

/// Dimension of the subspace of Sp(2n)-invariants in the m-th tensor power:
/// the number of balanced symplectic lattice words of length m over C_n.
/// Equals multiplicity(Partition{}, m, n); zero for odd m.
mpz_class invariant_dimension(int m, int n);

}  // namespace sympinv
