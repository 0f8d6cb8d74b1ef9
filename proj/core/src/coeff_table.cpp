#include "crossbessel/coeff_table.hpp"

#include <string>

#include "crossbessel/error.hpp"

namespace crossbessel {

CoeffQuad base_quad(int m) {
  return {m, 0, ExactPoly::constant(2 * m), ExactPoly{}, ExactPoly::constant(-1), ExactPoly{}};
}

CoeffQuad step_quad(int m, const CoeffQuad& next) {
  const ExactRational mm(m);
  const ExactPoly A = poly_scale(next.A, -4 * mm * mm) + poly_shift(poly_scale(next.B, 2 * mm), 4) -
                      poly_shift(next.C, 4);
  const ExactPoly B_tilde = poly_scale(next.A, 4 * mm) - poly_shift(next.B, 4);
  return {m, next.n + 1, A, next.B_tilde, B_tilde, next.A};
}

bool satisfies_recursion(const CoeffQuad& q, const CoeffQuad* next) {
  if (q.n < 0) return false;
  if (q.n == 0) return q == base_quad(q.m);
  if (next == nullptr || next->m != q.m + 1 || next->n != q.n - 1) return false;
  return q == step_quad(q.m, *next);
}

ExactRational coeff_closed_form_mod_x4(int m, int n) {
  if (n < 1) throw Error(ErrorKind::kDomain, "closed form requires n >= 1");
  mpz_class value = 2 * (m + n);
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(n));
  value *= (n % 2 == 0) ? four_pow : mpz_class(-four_pow);
  for (int k = 0; k < n; ++k) value *= mpz_class(m + k) * (m + k);
  return ExactRational(value);
}

const CoeffQuad& CoeffTable::get(int m, int n) {
  if (n < 0) throw Error(ErrorKind::kDomain, "coefficient depth n must be nonnegative");
  if (const CoeffQuad* hit = find(m, n)) return *hit;
  // walk down to the deepest cached link, then build back up
  int depth = n;
  while (depth > 0 && find(m + (n - depth) + 1, depth - 1) == nullptr) --depth;
  const CoeffQuad* prev = nullptr;
  int start = depth;
  if (depth == 0) {
    prev = &entries_.emplace(Key{m + n, 0}, base_quad(m + n)).first->second;
    start = 1;
  } else {
    prev = find(m + (n - depth) + 1, depth - 1);
    start = depth;
  }
  // prev is (m + n - start + 1, start - 1); produce depths start..n
  for (int d = start; d <= n; ++d) {
    const int order = m + (n - d);
    prev = &entries_.emplace(Key{order, d}, step_quad(order, *prev)).first->second;
  }
  return *prev;
}

const CoeffQuad* CoeffTable::find(int m, int n) const {
  auto it = entries_.find({m, n});
  return it == entries_.end() ? nullptr : &it->second;
}

void CoeffTable::prefill(int m_lo, int m_hi, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    for (int m = m_lo; m <= m_hi; ++m) get(m, n);
  }
}

void CoeffTable::insert_verified(CoeffQuad q) {
  const CoeffQuad* next = q.n > 0 ? find(q.m + 1, q.n - 1) : nullptr;
  if (!satisfies_recursion(q, next)) {
    throw Error(ErrorKind::kInvariantViolation,
                "quadruple (" + std::to_string(q.m) + ", " + std::to_string(q.n) + ") fails the recursion");
  }
  Key key{q.m, q.n};
  entries_.insert_or_assign(key, std::move(q));
}

const CoeffQuad& coeff_quad(int m, int n, CoeffTable& table) { return table.get(m, n); }

}  // namespace crossbessel
