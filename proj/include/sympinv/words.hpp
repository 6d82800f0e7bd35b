#pragma once

#include <string>
#include <vector>

namespace sympinv {

/// A letter of the alphabet C_n: +i encodes the letter i, -i encodes the
/// overlined letter i-bar. Zero is never a letter.
using Letter = int;

inline int letter_sign(Letter a) { return a > 0 ? 1 : -1; }
inline int letter_abs(Letter a) { return a > 0 ? a : -a; }

/// Position of a letter in the total order 1 < 2 < ... < n < -n < ... < -1,
/// which mirrors the basis order p_1 < ... < p_n < q_n < ... < q_1.
inline int letter_rank(Letter a, int n) { return a > 0 ? a - 1 : 2 * n + a; }

/// Lexicographic comparison of letter sequences under the letter order above.
bool word_less(const std::vector<Letter>& a, const std::vector<Letter>& b, int n);

/// True iff every letter has magnitude in 1..n and every prefix weight
/// vector (tau_1, ..., tau_n), with tau_i = count(+i) - count(-i) so far,
/// satisfies tau_1 >= tau_2 >= ... >= tau_n >= 0.
bool is_symplectic_lattice_word(const std::vector<Letter>& w, int n);

/// True iff count(+i) == count(-i) for every i.
bool is_balanced(const std::vector<Letter>& w);

/// A symplectic lattice word over C_n. Construction validates the lattice
/// condition, so a LatticeWord value is always a valid word.
class LatticeWord {
 public:
  LatticeWord() : n_(1) {}
  LatticeWord(std::vector<Letter> letters, int n);

  const std::vector<Letter>& letters() const { return letters_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool balanced() const { return is_balanced(letters_); }

  /// Equality compares letter sequences; the alphabet bound n is not part of
  /// the identity of a word.
  friend bool operator==(const LatticeWord& a, const LatticeWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int n_;
};

/// The sign word of a lattice word; entries are +1 or -1.
struct Pattern {
  std::vector<int> signs;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// All balanced symplectic lattice words of length m over C_n, in
/// lexicographic order under the letter order above. Empty for odd m.
std::vector<LatticeWord> enumerate_balanced_words(int m, int n);

/// (sgn alpha_1, ..., sgn alpha_m).
Pattern pattern(const LatticeWord& w);

/// The lexicographically smallest word in M+ with the given pattern:
/// |alpha_k| = max(s_k, s_{k-1}) of the prefix sums of delta, sgn alpha_k =
/// delta_k. Throws PatternError for an invalid pattern and
/// AlphabetOverflowError when a letter magnitude would exceed n.
LatticeWord lat(const Pattern& delta, int n);

enum class AlternationClass { NotInM, InM, InMPlus };

/// Classifies a balanced word by the per-magnitude subword test: w is in M
/// iff for each i the subword of +-i letters keeps every prefix sum in
/// {-1, 0, +1}; w is in M+ iff each such subword is i, i-bar, i, i-bar, ...
/// Throws std::invalid_argument for unbalanced input.
AlternationClass alternation_class(const std::vector<Letter>& w);

/// Parses the text form of a word: space-separated signed decimal integers,
/// e.g. "1 2 -2 -1". Throws std::invalid_argument naming the bad token.
std::vector<Letter> parse_word(const std::string& text);

/// Formats a letter sequence in the text form used by parse_word.
std::string format_word(const std::vector<Letter>& letters);

}  // namespace sympinv
