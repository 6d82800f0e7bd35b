#include "sympinv/partition.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sympinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) os << ',';
    os << p.parts()[i];
  }
  os << ')';
  return os.str();
}

std::set<Partition> stris_moves(const Partition& mu, int n) {
  if (n < 1) throw std::invalid_argument("stris_moves: board width must be >= 1");
  if (mu.length() > n) {
    throw std::invalid_argument("stris_moves: partition longer than board width");
  }

  std::set<Partition> out;
  const std::vector<int>& p = mu.parts();
  const int len = mu.length();

  // Drop a block onto column c; legal if weak decrease is kept.
  for (int c = 0; c < len; ++c) {
    if (c == 0 || p[c] + 1 <= p[c - 1]) {
      std::vector<int> q = p;
      ++q[c];
      out.insert(Partition(std::move(q)));
    }
  }
  if (len < n) {
    std::vector<int> q = p;
    q.push_back(1);
    out.insert(Partition(std::move(q)));
  }

  // Raise the top block off column c; legal if weak decrease is kept.
  for (int c = 0; c < len; ++c) {
    if (c + 1 < len && p[c] - 1 < p[c + 1]) continue;
    std::vector<int> q = p;
    if (--q[c] == 0) q.pop_back();  // only the last column can reach 0
    out.insert(Partition(std::move(q)));
  }

  return out;
}

namespace {

mpz_class count_histories(const std::vector<int>& lambda, int remaining, int n,
                          std::map<std::pair<std::vector<int>, int>, mpz_class>& memo) {
  int weight = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (weight > remaining || (remaining - weight) % 2 != 0) return 0;
  if (remaining == 0) return 1;  // weight == 0, so lambda is empty

  auto key = std::make_pair(lambda, remaining);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // A history of length m ending at lambda is a history of length m-1 ending
  // at some mu with lambda in T_n(mu); by add/remove duality that set of mu
  // is exactly T_n(lambda).
  mpz_class total = 0;
  for (const Partition& mu : stris_moves(Partition(lambda), n)) {
    total += count_histories(mu.parts(), remaining - 1, n, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

mpz_class multiplicity(const Partition& lambda, int m, int n) {
  if (m < 0) throw std::invalid_argument("multiplicity: m must be >= 0");
  if (n < 1) throw std::invalid_argument("multiplicity: n must be >= 1");
  if (lambda.length() > n) {
    throw std::invalid_argument("multiplicity: partition longer than board width");
  }
  // The memo table is confined to this call, so concurrent calls are safe.
  std::map<std::pair<std::vector<int>, int>, mpz_class> memo;
  return count_histories(lambda.parts(), m, n, memo);
}

mpz_class invariant_dimension(int m, int n) {
  return multiplicity(Partition{}, m, n);
}

}  // namespace sympinv
