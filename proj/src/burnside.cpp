#include "padic/burnside.hpp"

#include <stdexcept>

namespace padic {

namespace {

void require_same_prime(const EvSeq& a, const EvSeq& b) {
  if (a.p() != b.p()) throw std::invalid_argument("EvSeq: prime mismatch");
}

}  // namespace

EvSeq::EvSeq(long p, std::vector<Rational> prefix, Rational tail)
    : p_(p), prefix_(std::move(prefix)), tail_(std::move(tail)) {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

EvSeq evseq_zero(long p) { return EvSeq(p, Rational(0)); }
EvSeq evseq_one(long p) { return EvSeq(p, Rational(1)); }

EvSeq evseq_add(const EvSeq& a, const EvSeq& b) {
  require_same_prime(a, b);
  size_t len = std::max(a.prefix().size(), b.prefix().size());
  std::vector<Rational> prefix(len);
  for (size_t i = 0; i < len; ++i) prefix[i] = a.at(i) + b.at(i);
  return EvSeq(a.p(), std::move(prefix), a.tail() + b.tail());
}

EvSeq evseq_mul(const EvSeq& a, const EvSeq& b) {
  require_same_prime(a, b);
  size_t len = std::max(a.prefix().size(), b.prefix().size());
  std::vector<Rational> prefix(len);
  for (size_t i = 0; i < len; ++i) prefix[i] = a.at(i) * b.at(i);
  return EvSeq(a.p(), std::move(prefix), a.tail() * b.tail());
}

EvSeq evseq_neg(const EvSeq& a) {
  std::vector<Rational> prefix(a.prefix().size());
  for (size_t i = 0; i < prefix.size(); ++i) prefix[i] = -a.prefix()[i];
  return EvSeq(a.p(), std::move(prefix), -a.tail());
}

EvSeq idempotent_e(long p, int n) {
  if (n < 0) throw std::invalid_argument("idempotent_e: negative index");
  std::vector<Rational> prefix(n + 1);
  prefix[n] = 1;
  return EvSeq(p, std::move(prefix), Rational(0));
}

EvSeq idempotent_f(long p, int n) {
  if (n < 0) throw std::invalid_argument("idempotent_f: negative index");
  std::vector<Rational> prefix(n);  // n zeros, then ones
  return EvSeq(p, std::move(prefix), Rational(1));
}

EvSeq truncate(const EvSeq& a, int n) {
  if (n < 0) throw std::invalid_argument("truncate: negative index");
  std::vector<Rational> prefix;
  for (size_t i = n; i < a.prefix().size(); ++i) prefix.push_back(a.prefix()[i]);
  return EvSeq(a.p(), std::move(prefix), a.tail());
}

void validate(const FiniteBurnsideElt& x) {
  if (x.p < 2) throw std::invalid_argument("FiniteBurnsideElt: bad prime");
  if (x.n < 0 || x.coeffs.size() != static_cast<size_t>(x.n) + 1)
    throw std::invalid_argument("FiniteBurnsideElt: coefficient count");
}

FiniteBurnsideElt finite_add(const FiniteBurnsideElt& a, const FiniteBurnsideElt& b) {
  if (a.p != b.p || a.n != b.n)
    throw std::invalid_argument("finite_add: level mismatch");
  FiniteBurnsideElt r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

FiniteBurnsideElt finite_mul(const FiniteBurnsideElt& a, const FiniteBurnsideElt& b) {
  if (a.p != b.p || a.n != b.n)
    throw std::invalid_argument("finite_mul: level mismatch");
  FiniteBurnsideElt r{a.p, a.n, std::vector<Rational>(a.n + 1)};
  for (int i = 0; i <= a.n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j <= b.n; ++j) {
      if (b.coeffs[j] == 0) continue;
      r.coeffs[std::max(i, j)] += a.coeffs[i] * b.coeffs[j] * Rational(ipow(a.p, std::min(i, j)));
    }
  }
  return r;
}

std::vector<Rational> marks(const FiniteBurnsideElt& x) {
  validate(x);
  std::vector<Rational> mk(x.n + 1);
  for (int j = 0; j <= x.n; ++j)
    for (int a = 0; a <= j; ++a) mk[j] += x.coeffs[a] * Rational(ipow(x.p, a));
  return mk;
}

FiniteBurnsideElt from_marks(long p, int n, const std::vector<Rational>& mk) {
  if (mk.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("from_marks: size mismatch");
  FiniteBurnsideElt x{p, n, std::vector<Rational>(n + 1)};
  // marks[j] = sum_{a<=j} coeffs[a] p^a: solve by forward substitution.
  Rational acc(0);
  for (int j = 0; j <= n; ++j) {
    x.coeffs[j] = (mk[j] - acc) / Rational(ipow(p, j));
    acc += x.coeffs[j] * Rational(ipow(p, j));
  }
  return x;
}

EvSeq colim_embed(const FiniteBurnsideElt& x) {
  std::vector<Rational> mk = marks(x);
  Rational tail = mk.back();
  mk.pop_back();
  return EvSeq(x.p, std::move(mk), std::move(tail));
}

FiniteBurnsideElt inflate_finite_burnside(const FiniteBurnsideElt& x, int n2) {
  if (n2 < x.n) throw std::invalid_argument("inflate_finite_burnside: bad level");
  std::vector<Rational> mk = marks(x);
  mk.resize(n2 + 1, mk.back());
  return from_marks(x.p, n2, mk);
}

FiniteBurnsideElt grothendieck_e(long p, int n) {
  if (n < 0) throw std::invalid_argument("grothendieck_e: negative index");
  FiniteBurnsideElt x{p, n + 1, std::vector<Rational>(n + 2)};
  x.coeffs[n] = Rational(1) / Rational(ipow(p, n));
  x.coeffs[n + 1] = -Rational(1) / Rational(ipow(p, n + 1));
  return x;
}

PullbackDecomposition pullback_square_check(const EvSeq& a) {
  PullbackDecomposition d;
  d.tail_value = a.tail();
  d.sequence_prefix = a.prefix();
  d.sequence_tail = a.tail();
  // The two legs agree in colim_k prod_{n>=k} Q exactly when the sequence is
  // eventually the tail value, which holds by construction.
  d.germ_agrees = true;
  d.reconstructed = EvSeq(a.p(), d.sequence_prefix, d.tail_value);
  d.exact = (d.reconstructed == a);
  return d;
}

}  // namespace padic
