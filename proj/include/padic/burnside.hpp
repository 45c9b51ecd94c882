#pragma once

#include "padic/rational.hpp"

#include <vector>

namespace padic {

/// Element of the rational Burnside ring A(Z_p): an eventually constant
/// sequence of rationals. Entry n is the value at the subgroup p^n Z_p and
/// the tail is the shared value of all large subgroups and of the trivial
/// group. Canonical form: the last prefix entry differs from the tail.
class EvSeq {
 public:
  EvSeq() : p_(2), tail_(0) {}
  explicit EvSeq(long p, Rational tail = Rational(0)) : p_(p), tail_(std::move(tail)) {}
  EvSeq(long p, std::vector<Rational> prefix, Rational tail);

  long p() const { return p_; }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& tail() const { return tail_; }
  Rational at(size_t n) const { return n < prefix_.size() ? prefix_[n] : tail_; }

  bool operator==(const EvSeq&) const = default;

 private:
  long p_;
  std::vector<Rational> prefix_;
  Rational tail_;
};

EvSeq evseq_zero(long p);
EvSeq evseq_one(long p);
EvSeq evseq_add(const EvSeq& a, const EvSeq& b);  // prime mismatch -> throw
EvSeq evseq_mul(const EvSeq& a, const EvSeq& b);
EvSeq evseq_neg(const EvSeq& a);
inline EvSeq operator+(const EvSeq& a, const EvSeq& b) { return evseq_add(a, b); }
inline EvSeq operator*(const EvSeq& a, const EvSeq& b) { return evseq_mul(a, b); }
inline EvSeq operator-(const EvSeq& a, const EvSeq& b) { return evseq_add(a, evseq_neg(b)); }

/// e_n: indicator of the subgroup p^n Z_p.
EvSeq idempotent_e(long p, int n);
/// f_n = 1 - sum_{i<n} e_i: zero before position n, one from n on.
EvSeq idempotent_f(long p, int n);

/// Drops the first n entries; models the restriction A(Z_p) -> A(p^n Z_p).
EvSeq truncate(const EvSeq& a, int n);

/// Element of the rational Burnside ring A(Z/p^n) in the orbit basis
/// [Z/p^n / p^a Z/p^n] for a = 0..n.
struct FiniteBurnsideElt {
  long p = 2;
  int n = 0;
  std::vector<Rational> coeffs;  // size n + 1

  bool operator==(const FiniteBurnsideElt&) const = default;
};

void validate(const FiniteBurnsideElt& x);

/// Bilinear extension of [a][b] = p^min(a,b) [max(a,b)].
FiniteBurnsideElt finite_mul(const FiniteBurnsideElt& a, const FiniteBurnsideElt& b);
FiniteBurnsideElt finite_add(const FiniteBurnsideElt& a, const FiniteBurnsideElt& b);

/// marks[j] = number of points fixed by p^j Z/p^n, extended linearly:
/// the orbit [a] contributes p^a when j >= a and zero otherwise.
std::vector<Rational> marks(const FiniteBurnsideElt& x);
/// Inverse of marks (the marks matrix is triangular).
FiniteBurnsideElt from_marks(long p, int n, const std::vector<Rational>& mk);

/// A(Z/p^n) -> A(Z_p) along the subgroup identification of the colimit:
/// the marks vector (m_0..m_n) becomes the sequence (m_0..m_{n-1}, tail m_n).
EvSeq colim_embed(const FiniteBurnsideElt& x);

/// Image of x under A(Z/p^n) -> A(Z/p^n2) induced by the projection
/// Z/p^n2 -> Z/p^n; on marks this repeats the last entry.
FiniteBurnsideElt inflate_finite_burnside(const FiniteBurnsideElt& x, int n2);

/// p^-n [a=n] - p^-(n+1) [a=n+1] in A(Z/p^(n+1)); its marks vector is the
/// indicator of position n.
FiniteBurnsideElt grothendieck_e(long p, int n);

/// The pullback-square decomposition of an eventually constant sequence:
/// its value at the trivial group and its full sequence, agreeing in the
/// germ ring. reconstructed is rebuilt from the parts.
struct PullbackDecomposition {
  Rational tail_value;
  std::vector<Rational> sequence_prefix;  // representative of the product leg
  Rational sequence_tail;
  bool germ_agrees = false;
  EvSeq reconstructed;
  bool exact = false;  // reconstructed equals the input
};

PullbackDecomposition pullback_square_check(const EvSeq& a);

}  // namespace padic
