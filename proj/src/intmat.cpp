#include "sympinv/intmat.hpp"

#include <cstddef>
#include <utility>

namespace sympinv {

namespace {

// Divides the row by the gcd of its entries. Returns false for a zero row.
bool strip_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const mpz_class& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return false;
  if (g != 1) {
    for (mpz_class& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return true;
}

// x <- y[c]*x - x[c]*y, making x[c] == 0.
void cross_eliminate(std::vector<mpz_class>& x, const std::vector<mpz_class>& y, std::size_t c) {
  const mpz_class xc = x[c];
  const mpz_class yc = y[c];
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = yc * x[j] - xc * y[j];
  }
}

}  // namespace

long long integer_matrix_rank(std::vector<std::vector<mpz_class>> rows) {
  // Echelon basis kept fully reduced: each row has zeros at the pivot
  // columns of all the others, so a single reduction pass per incoming row
  // suffices.
  std::vector<std::vector<mpz_class>> basis;
  std::vector<std::size_t> pivot;

  for (std::vector<mpz_class>& row : rows) {
    if (!strip_content(row)) continue;
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (row[pivot[t]] == 0) continue;
      cross_eliminate(row, basis[t], pivot[t]);
    }
    if (!strip_content(row)) continue;

    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (basis[t][lead] == 0) continue;
      cross_eliminate(basis[t], row, lead);
      strip_content(basis[t]);
    }
    basis.push_back(std::move(row));
    pivot.push_back(lead);
  }
  return static_cast<long long>(basis.size());
}

}  // namespace sympinv
