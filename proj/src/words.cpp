#include "sympinv/words.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sympinv/errors.hpp"

namespace sympinv {

bool word_less(const std::vector<Letter>& a, const std::vector<Letter>& b, int n) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [n](Letter x, Letter y) { return letter_rank(x, n) < letter_rank(y, n); });
}

bool is_symplectic_lattice_word(const std::vector<Letter>& w, int n) {
  if (n < 1) return w.empty();
  std::vector<int> tau(n, 0);
  for (Letter a : w) {
    if (a == 0 || letter_abs(a) > n) return false;
    int i = letter_abs(a) - 1;
    tau[i] += letter_sign(a);
    // Only the updated entry can break the chain tau_1 >= ... >= tau_n >= 0.
    if (a > 0) {
      if (i > 0 && tau[i] > tau[i - 1]) return false;
    } else {
      if (i + 1 < n ? tau[i] < tau[i + 1] : tau[i] < 0) return false;
    }
  }
  return true;
}

bool is_balanced(const std::vector<Letter>& w) {
  std::map<int, int> net;
  for (Letter a : w) net[letter_abs(a)] += letter_sign(a);
  for (const auto& [mag, count] : net) {
    if (count != 0) return false;
  }
  return true;
}

LatticeWord::LatticeWord(std::vector<Letter> letters, int n)
    : letters_(std::move(letters)), n_(n) {
  if (n < 1) throw std::invalid_argument("LatticeWord: n must be >= 1");
  if (!is_symplectic_lattice_word(letters_, n)) {
    throw std::invalid_argument("LatticeWord: not a symplectic lattice word over C_" +
                                std::to_string(n));
  }
}

namespace {

void enumerate_rec(int m, int n, std::vector<Letter>& prefix, std::vector<int>& tau,
                   int board_weight, std::vector<LatticeWord>& out) {
  int pos = static_cast<int>(prefix.size());
  if (pos == m) {
    if (board_weight == 0) out.emplace_back(prefix, n);
    return;
  }
  int remaining = m - pos - 1;
  // Letters tried in rank order so the output is lexicographically sorted.
  for (int r = 0; r < 2 * n; ++r) {
    Letter a = r < n ? r + 1 : r - 2 * n;
    int i = letter_abs(a) - 1;
    int s = letter_sign(a);
    // Lattice condition after appending a.
    if (s > 0) {
      if (i > 0 && tau[i] + 1 > tau[i - 1]) continue;
    } else {
      if (i + 1 < n ? tau[i] - 1 < tau[i + 1] : tau[i] - 1 < 0) continue;
    }
    // Balance must stay reachable: the remaining letters must be able to
    // clear the board, and parity must work out.
    int w = board_weight + s;
    if (w > remaining || (remaining - w) % 2 != 0) continue;
    tau[i] += s;
    prefix.push_back(a);
    enumerate_rec(m, n, prefix, tau, w, out);
    prefix.pop_back();
    tau[i] -= s;
  }
}

}  // namespace

std::vector<LatticeWord> enumerate_balanced_words(int m, int n) {
  if (m < 0) throw std::invalid_argument("enumerate_balanced_words: m must be >= 0");
  if (n < 1) throw std::invalid_argument("enumerate_balanced_words: n must be >= 1");
  std::vector<LatticeWord> out;
  if (m % 2 != 0) return out;
  std::vector<Letter> prefix;
  std::vector<int> tau(n, 0);
  enumerate_rec(m, n, prefix, tau, 0, out);
  return out;
}

Pattern pattern(const LatticeWord& w) {
  Pattern p;
  p.signs.reserve(w.letters().size());
  for (Letter a : w.letters()) p.signs.push_back(letter_sign(a));
  return p;
}

LatticeWord lat(const Pattern& delta, int n) {
  int sum = 0;
  for (int d : delta.signs) {
    if (d != 1 && d != -1) throw PatternError("lat: pattern entries must be +1 or -1");
    sum += d;
    if (sum < 0) throw PatternError("lat: pattern has a negative prefix sum");
  }
  if (sum != 0) throw PatternError("lat: pattern entries do not sum to zero");

  std::vector<Letter> letters;
  letters.reserve(delta.signs.size());
  int prev = 0;
  for (int d : delta.signs) {
    int cur = prev + d;
    int mag = std::max(cur, prev);
    if (mag > n) {
      throw AlphabetOverflowError("lat: letter magnitude " + std::to_string(mag) +
                                  " exceeds alphabet bound " + std::to_string(n));
    }
    letters.push_back(d > 0 ? mag : -mag);
    prev = cur;
  }
  return LatticeWord(std::move(letters), n);
}

AlternationClass alternation_class(const std::vector<Letter>& w) {
  if (!is_balanced(w)) {
    throw std::invalid_argument("alternation_class: word is not balanced");
  }
  // Prefix sums of each +-i subword. |sum| <= 1 throughout puts the word in
  // M (even prefixes are then forced back to zero, so consecutive pairs have
  // opposite signs); sums confined to {0, 1} give the strict alternation
  // i, i-bar, i, i-bar, ... of M+.
  std::map<int, int> sums;
  bool in_m = true, in_m_plus = true;
  for (Letter a : w) {
    int& s = sums[letter_abs(a)];
    s += letter_sign(a);
    if (s > 1 || s < -1) in_m = false;
    if (s > 1 || s < 0) in_m_plus = false;
  }
  if (!in_m) return AlternationClass::NotInM;
  return in_m_plus ? AlternationClass::InMPlus : AlternationClass::InM;
}

std::vector<Letter> parse_word(const std::string& text) {
  std::vector<Letter> out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
      throw std::invalid_argument("invalid letter token '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::string format_word(const std::vector<Letter>& letters) {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) os << ' ';
    os << letters[i];
  }
  return os.str();
}

}  // namespace sympinv
