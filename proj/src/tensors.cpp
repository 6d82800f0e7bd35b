#include "sympinv/tensors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sympinv/errors.hpp"

namespace sympinv {

std::string to_string(const BasisVector& b) {
  return (b.kind == VecKind::P ? "p" : "q") + std::to_string(b.index);
}

BasisVector parse_basis_vector(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'p' && text[0] != 'q')) {
    throw std::invalid_argument("invalid basis vector '" + text + "'");
  }
  int index = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("invalid basis vector '" + text + "'");
    }
    index = index * 10 + (text[i] - '0');
  }
  if (index < 1) throw std::invalid_argument("invalid basis vector '" + text + "'");
  return {text[0] == 'p' ? VecKind::P : VecKind::Q, index};
}

bool monomial_less(const Monomial& a, const Monomial& b, int n) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [n](const BasisVector& x, const BasisVector& y) {
        return basis_rank(x, n) < basis_rank(y, n);
      });
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
      throw std::invalid_argument("Permutation: images must be a bijection on 1..m");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) {
    throw std::invalid_argument("Permutation::compose: size mismatch");
  }
  std::vector<int> images(size());
  for (int k = 1; k <= size(); ++k) images[k - 1] = (*this)(other(k));
  return Permutation(std::move(images));
}

SparseTensor::SparseTensor(int degree, int n)
    : degree_(degree), n_(n), terms_(MonomialOrder{n}) {
  if (degree < 0) throw std::invalid_argument("SparseTensor: degree must be >= 0");
  if (n < 1) throw std::invalid_argument("SparseTensor: n must be >= 1");
}

SparseTensor SparseTensor::unit(int n) {
  SparseTensor t(0, n);
  t.add_term({}, 1);
  return t;
}

void SparseTensor::add_term(const Monomial& mono, const mpz_class& coeff) {
  if (static_cast<int>(mono.size()) != degree_) {
    throw std::invalid_argument("SparseTensor::add_term: wrong monomial length");
  }
  for (const BasisVector& b : mono) {
    if (b.index < 1 || b.index > n_) {
      throw std::invalid_argument("SparseTensor::add_term: basis index out of range");
    }
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class SparseTensor::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
  if (degree_ != other.degree_ || n_ != other.n_) {
    throw std::invalid_argument("SparseTensor: degree/rank mismatch in addition");
  }
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& other) {
  if (degree_ != other.degree_ || n_ != other.n_) {
    throw std::invalid_argument("SparseTensor: degree/rank mismatch in subtraction");
  }
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

SparseTensor& SparseTensor::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

SparseTensor permute(const SparseTensor& t, const Permutation& sigma) {
  if (sigma.size() != t.degree()) {
    throw std::invalid_argument("permute: permutation size must equal tensor degree");
  }
  SparseTensor out(t.degree(), t.n());
  Monomial moved(t.degree());
  for (const auto& [mono, coeff] : t.terms()) {
    for (int k = 1; k <= t.degree(); ++k) moved[sigma(k) - 1] = mono[k - 1];
    out.add_term(moved, coeff);
  }
  return out;
}

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("tensor_product: rank mismatch");
  }
  SparseTensor out(a.degree() + b.degree(), a.n());
  Monomial mono(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    std::copy(ma.begin(), ma.end(), mono.begin());
    for (const auto& [mb, cb] : b.terms()) {
      std::copy(mb.begin(), mb.end(), mono.begin() + a.degree());
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

SparseTensor wedge(const SparseTensor& a, const SparseTensor& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: rank mismatch");
  const int k = a.degree();
  const int m = k + b.degree();
  SparseTensor out(m, a.n());
  if (a.is_zero() || b.is_zero()) return out;

  // Iterate over the placements 1 <= i_1 < ... < i_k <= m (0-based here).
  std::vector<int> slots(k);
  std::iota(slots.begin(), slots.end(), 0);
  Monomial mono(m);
  while (true) {
    long long shift = 0;  // (i_1 - 1) + ... + (i_k - k), same parity 0-based
    for (int j = 0; j < k; ++j) shift += slots[j] - j;
    const int sign = shift % 2 == 0 ? 1 : -1;

    std::vector<int> vacant;
    vacant.reserve(m - k);
    for (int pos = 0, j = 0; pos < m; ++pos) {
      if (j < k && slots[j] == pos) {
        ++j;
      } else {
        vacant.push_back(pos);
      }
    }

    for (const auto& [ma, ca] : a.terms()) {
      for (int j = 0; j < k; ++j) mono[slots[j]] = ma[j];
      for (const auto& [mb, cb] : b.terms()) {
        for (int j = 0; j < m - k; ++j) mono[vacant[j]] = mb[j];
        out.add_term(mono, sign * ca * cb);
      }
    }

    // Next k-combination of {0..m-1}.
    int j = k - 1;
    while (j >= 0 && slots[j] == m - k + j) --j;
    if (j < 0) break;
    ++slots[j];
    for (int l = j + 1; l < k; ++l) slots[l] = slots[l - 1] + 1;
  }
  return out;
}

SparseTensor omega(int n) {
  if (n < 1) throw std::invalid_argument("omega: n must be >= 1");
  SparseTensor t(2, n);
  for (int i = 1; i <= n; ++i) {
    t.add_term({p(i), q(i)}, 1);
    t.add_term({q(i), p(i)}, -1);
  }
  return t;
}

Monomial word_monomial(const LatticeWord& w, int n) {
  Monomial mono;
  mono.reserve(w.letters().size());
  for (Letter a : w.letters()) {
    if (letter_abs(a) > n) {
      throw std::invalid_argument("word_monomial: letter magnitude exceeds n");
    }
    mono.push_back(a > 0 ? p(a) : q(-a));
  }
  return mono;
}

namespace {

// g is assumed valid for n throughout the recursion.
SparseTensor build_rec(const WaveGraph& g, int n) {
  if (g.m() == 0) return SparseTensor::unit(n);

  std::vector<Component> comps = components(g);
  if (comps.size() == 1) {
    if (g.m() == 2) return omega(n);
    // Path with word 1 beta 1-bar: t_G = omega ^ t_B where B realizes beta
    // with every letter moved down one page.
    const LatticeWord alpha = graph_to_word(g);
    std::vector<Letter> inner(alpha.letters().begin() + 1, alpha.letters().end() - 1);
    for (Letter& a : inner) a += a > 0 ? -1 : 1;
    const WaveGraph b = word_to_graph(LatticeWord(std::move(inner), n), n);
    return wedge(omega(n), build_rec(b, n));
  }

  // Split off the component containing vertex 1 and recurse on the rest,
  // then interleave the slots back onto the original vertex positions.
  const std::vector<int>& head = comps.front().vertices;
  std::vector<int> tail;
  tail.reserve(g.m() - head.size());
  {
    std::vector<bool> in_head(g.m() + 1, false);
    for (int v : head) in_head[v] = true;
    for (int v = 1; v <= g.m(); ++v) {
      if (!in_head[v]) tail.push_back(v);
    }
  }
  std::map<int, int> tail_index;
  for (std::size_t j = 0; j < tail.size(); ++j) tail_index[tail[j]] = static_cast<int>(j) + 1;
  std::vector<Edge> tail_edges;
  for (const Edge& e : g.edges()) {
    auto it = tail_index.find(e.u);
    if (it == tail_index.end()) continue;
    tail_edges.push_back({it->second, tail_index.at(e.v), e.page});
  }
  const WaveGraph rest(static_cast<int>(tail.size()), std::move(tail_edges));

  SparseTensor product =
      tensor_product(build_rec(comps.front().graph, n), build_rec(rest, n));
  std::vector<int> images;
  images.reserve(g.m());
  images.insert(images.end(), head.begin(), head.end());
  images.insert(images.end(), tail.begin(), tail.end());
  return permute(product, Permutation(std::move(images)));
}

}  // namespace

SparseTensor build_invariant(const WaveGraph& g, int n) {
  if (!validate(g, n)) {
    throw std::invalid_argument("build_invariant: not a valid wave graph for n = " +
                                std::to_string(n));
  }
  return build_rec(g, n);
}

std::pair<Monomial, mpz_class> minimal_monomial(const SparseTensor& t) {
  if (t.is_zero()) throw EmptyTensorError("minimal_monomial: zero tensor");
  const auto& [mono, coeff] = *t.terms().begin();
  return {mono, coeff};
}

}  // namespace sympinv
