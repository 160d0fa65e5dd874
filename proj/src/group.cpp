#include "asmkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "asmkit/kernels.hpp"

namespace asmkit {

SignedPermutation SignedPermutation::identity(int k) {
  SignedPermutation g;
  g.pi.resize(static_cast<std::size_t>(k));
  std::iota(g.pi.begin(), g.pi.end(), 1);
  g.eps.assign(static_cast<std::size_t>(k), 1);
  return g;
}

bool SignedPermutation::is_valid() const {
  if (pi.size() != eps.size()) return false;
  std::vector<int> seen(pi.size() + 1, 0);
  for (int p : pi) {
    if (p < 1 || p > k() || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = 1;
  }
  for (int e : eps)
    if (e != 1 && e != -1) return false;
  return true;
}

std::string SignedPermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? "," : "") + std::to_string(pi[i]);
  s += "|";
  for (std::size_t i = 0; i < eps.size(); ++i) s += std::string(i ? "," : "") + (eps[i] > 0 ? "+" : "-");
  return s + "]";
}

int permutation_sign(const std::vector<int>& pi) {
  int s = 1;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (pi[i] > pi[j]) s = -s;
  return s;
}

int sgn(const SignedPermutation& g) {
  int s = permutation_sign(g.pi);
  for (int e : g.eps)
    if (e < 0) s = -s;
  return s;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.k() != h.k()) throw std::invalid_argument("composing elements of different rank");
  int k = g.k();
  SignedPermutation r;
  r.pi.resize(static_cast<std::size_t>(k));
  r.eps.resize(static_cast<std::size_t>(k));
  std::vector<int> ginv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) ginv[static_cast<std::size_t>(g.pi[i] - 1)] = i + 1;
  for (int i = 0; i < k; ++i) r.pi[i] = g.pi[static_cast<std::size_t>(h.pi[i] - 1)];
  // eta_j = eps_j * delta_{pi^-1(j)}
  for (int j = 0; j < k; ++j) r.eps[j] = g.eps[j] * h.eps[static_cast<std::size_t>(ginv[j] - 1)];
  return r;
}

SignedPermutation inverse(const SignedPermutation& g) {
  for (const auto& h : group_elements(Group::Hyperoctahedral, g.k()))
    if (compose(g, h) == SignedPermutation::identity(g.k())) return h;
  throw std::logic_error("no inverse found");
}

std::vector<SignedPermutation> group_elements(Group group, int k) {
  std::vector<SignedPermutation> out;
  std::vector<int> pi(static_cast<std::size_t>(k));
  std::iota(pi.begin(), pi.end(), 1);
  int nsigns = group == Group::Hyperoctahedral ? (1 << k) : 1;
  do {
    for (int s = 0; s < nsigns; ++s) {
      SignedPermutation g;
      g.pi = pi;
      g.eps.resize(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) g.eps[i] = (s >> i) & 1 ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

std::vector<int> zero_based(const std::vector<int>& pi) {
  std::vector<int> p(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) p[i] = pi[i] - 1;
  return p;
}

}  // namespace

RationalFunction act(const SignedPermutation& g, const RationalFunction& f) {
  RationalFunction r = f.permute(zero_based(g.pi));
  for (int i = 0; i < g.k(); ++i)
    if (g.eps[i] < 0) r = r.flip(i);
  return r;
}

LaurentPolynomial act(const SignedPermutation& g, const LaurentPolynomial& p) {
  LaurentPolynomial r = p.permute(zero_based(g.pi));
  for (int i = 0; i < g.k(); ++i)
    if (g.eps[i] < 0) r = r.flip(i);
  return r;
}

LaurentPolynomial antisymmetrize(const LaurentPolynomial& p, Group group, int k) {
  // sum over pi first, then the sign part factors as prod_i (1 - flip_i)
  PolyBuilder b;
  for (const auto& g : group_elements(Group::Symmetric, k)) {
    LaurentPolynomial t = p.permute(zero_based(g.pi));
    b.add_scaled(t, Rational(permutation_sign(g.pi)));
  }
  LaurentPolynomial s = b.build();
  if (group == Group::Hyperoctahedral)
    for (int i = 0; i < k; ++i) s -= s.flip(i);
  return s;
}

RationalFunction antisymmetrize(const RationalFunction& f, Group group, int k) {
  RationalFunction s;
  for (const auto& g : group_elements(Group::Symmetric, k)) {
    RationalFunction t = f.permute(zero_based(g.pi));
    s = permutation_sign(g.pi) > 0 ? s + t : s - t;
  }
  if (group == Group::Hyperoctahedral)
    for (int i = 0; i < k; ++i) s = s - s.flip(i);
  return s;
}

bool is_antisymmetric(const RationalFunction& f, Group group, int k) {
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    if (!(f.permute(p) == -f)) return false;
  }
  if (group == Group::Hyperoctahedral && k >= 1)
    if (!(f.flip(0) == -f)) return false;
  return true;
}

bool divides_vandermonde(const LaurentPolynomial& p, int k) {
  LaurentPolynomial q;
  return try_exact_divide(p, vandermonde(k), q);
}

bool divides_delta(const LaurentPolynomial& p, int k) {
  LaurentPolynomial q;
  return try_exact_divide(p, delta(k), q);
}

}  // namespace asmkit
