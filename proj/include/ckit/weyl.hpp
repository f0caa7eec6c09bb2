#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ckit/cartan.hpp"

namespace ckit {

// Affine Weyl group element as its exact action on weight coordinates.
// Words act right to left: {i1, i2, ..., il} denotes s_{i1} s_{i2} ... s_{il}
// with s_{il} applied first. Equality of elements is equality of actions,
// which is faithful on P.
struct WeylElement {
  Mat<Rational> mat;  // (n+2) x (n+2) acting on (lam..., delta)

  bool operator==(const WeylElement &o) const { return mat == o.mat; }
  bool operator<(const WeylElement &o) const { return mat.a < o.mat.a; }
};

struct TranslationVector {
  std::vector<long long> xi;  // over the classical root basis {cl(alpha_j) : j != i0}
};

WeylElement weyl_identity(const CartanDatum &cd);
WeylElement simple_reflection(const CartanDatum &cd, int i);
WeylElement compose(const WeylElement &a, const WeylElement &b);  // a after b
WeylElement inverse(const WeylElement &w);
WeylElement from_word(const CartanDatum &cd, const std::vector<int> &word);

Weight act(const CartanDatum &cd, const WeylElement &w, const Weight &lambda);
Weight reflect(const CartanDatum &cd, int i, const Weight &lambda);

// Sign of a real root: beta = beta_cl + n*delta is negative iff n < 0, or
// n = 0 and beta_cl is a negative classical root.
bool is_negative_root(const CartanDatum &cd, const Weight &beta);

std::vector<int> reduced_word(const CartanDatum &cd, const WeylElement &w);
long long weyl_length(const CartanDatum &cd, const WeylElement &w);

WeylElement translation(const CartanDatum &cd, const TranslationVector &xi);
long long translation_length(const CartanDatum &cd, const TranslationVector &xi);

// The three expressions of the translation-length formula; all equal.
struct TLengthForms {
  Rational by_positive_part;  // sum over classical roots of (beta,xi)_+ / c_beta
  Rational by_absolute;       // half sum of |(beta,xi)| / c_beta
  Rational by_tilde;          // sum over the reduced system of (beta^vee, xi)_+
};
TLengthForms translation_length_forms(const CartanDatum &cd, const TranslationVector &xi);

// w = t(xi) * w0 with w0 in W_0 = <s_i : i != i0>.
struct Decomposition {
  WeylElement w0;
  TranslationVector xi;
};
Decomposition decompose(const CartanDatum &cd, const WeylElement &w);

bool is_w_dominant(const CartanDatum &cd, const Weight &lambda, const WeylElement &w);
bool is_regularly_w_dominant(const CartanDatum &cd, const Weight &lambda, const WeylElement &w);

// Classical action (the image of w in GL(P_cl)).
ClassicalWeight cl_act(const CartanDatum &cd, const WeylElement &w, const ClassicalWeight &mu);

// All elements of W_cl as actions on classical root-basis coordinates.
std::vector<Mat<Rational>> classical_weyl_group(const CartanDatum &cd);

// Breadth-first table of group elements up to the given length; used as an
// independent length oracle.
std::map<WeylElement, long long> weyl_ball(const CartanDatum &cd, long long max_len);

}  // namespace ckit
