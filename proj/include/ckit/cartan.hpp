#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckit/linalg.hpp"
#include "ckit/rational.hpp"

namespace ckit {

// Element of the weight lattice P: coefficients over the fundamental
// weights Lambda_i plus a rational delta coefficient.
struct Weight {
  std::vector<long long> lam;  // <h_i, .> for i in I
  Rational delta = 0;

  bool operator==(const Weight &o) const { return lam == o.lam && delta == o.delta; }
  bool operator!=(const Weight &o) const { return !(*this == o); }
  bool operator<(const Weight &o) const {
    if (lam != o.lam) return lam < o.lam;
    return delta < o.delta;
  }
};

// Image of a weight in P_cl: the Lambda coefficients, delta discarded.
struct ClassicalWeight {
  std::vector<long long> coeffs;

  bool operator==(const ClassicalWeight &o) const { return coeffs == o.coeffs; }
  bool operator!=(const ClassicalWeight &o) const { return !(*this == o); }
  bool operator<(const ClassicalWeight &o) const { return coeffs < o.coeffs; }
  bool is_zero() const {
    for (auto c : coeffs)
      if (c) return false;
    return true;
  }
};

// A classical root together with its squared length; coordinates are over
// the classical simple-root basis {cl(alpha_i) : i != i0}.
struct ClassicalRoot {
  std::vector<long long> coords;
  Rational norm2;  // (beta, beta)

  bool operator<(const ClassicalRoot &o) const { return coords < o.coords; }
  bool operator==(const ClassicalRoot &o) const { return coords == o.coords; }
};

struct CartanDatum {
  std::string label;
  int n = 0;                                  // nodes are 0..n
  std::vector<std::vector<long long>> cart;   // <h_i, alpha_j>
  std::vector<long long> marks;               // a_i
  std::vector<long long> comarks;             // a_i^vee
  std::vector<Rational> len2;                 // (alpha_i, alpha_i)/2
  long long d = 1;                            // (alpha_i,alpha_i)/2 in Z/d
  int i0 = 0;        // node generating the classical complement; a_{i0} = 1
  int zero_vee = 0;  // node with comark 1
  std::vector<int> admissible_i0;
  bool untwisted = true;

  // classical data, over the basis {cl(alpha_j) : j != i0}
  std::vector<int> cl_basis;                 // the node list, ascending
  Mat<Rational> gram;                        // (alpha_i, alpha_j) for i,j in cl_basis
  Mat<Rational> gram_inv;
  std::vector<ClassicalRoot> cl_roots;       // all classical roots

  int size() const { return n + 1; }
};

const CartanDatum &build_cartan(const std::string &label);
std::vector<std::string> cartan_catalog_labels();

// --- weight construction -------------------------------------------------

Weight zero_weight(const CartanDatum &cd);
Weight fundamental_weight(const CartanDatum &cd, int i);  // Lambda_i
Weight simple_root(const CartanDatum &cd, int i);         // alpha_i
Weight delta_weight(const CartanDatum &cd);
Weight varpi(const CartanDatum &cd, int i);  // Lambda_i - a_i^vee Lambda_{0vee}, i != 0vee
Weight rho_weight(const CartanDatum &cd);    // <h_i, rho> = 1 for all i, (rho, rho) = 0

Weight add(const Weight &a, const Weight &b);
Weight sub(const Weight &a, const Weight &b);
Weight scale(const Weight &a, long long k);

// --- basic functionals ----------------------------------------------------

inline long long pairing(const Weight &w, int i) { return w.lam[i]; }
long long level(const CartanDatum &cd, const Weight &w);
long long level(const CartanDatum &cd, const ClassicalWeight &w);
ClassicalWeight cl(const Weight &w);

// Decompose beta in Q + Q*delta: beta = sum m_i alpha_i + r delta with
// m_{i0} = 0 chosen as the canonical representative. Throws if beta is
// outside the span.
struct RootDeltaDecomp {
  std::vector<Rational> root_coeffs;  // size n+1, entry i0 is zero
  Rational delta_coeff;
};
RootDeltaDecomp decompose_root_delta(const CartanDatum &cd, const Weight &beta);

// (lambda, beta) for beta in Q + Q*delta.
Rational form_root_side(const CartanDatum &cd, const Weight &lambda, const Weight &beta);

// (lambda, mu) for level-zero lambda, mu via the positive-definite
// classical form.
Rational form_level0(const CartanDatum &cd, const Weight &lambda, const Weight &mu);
Rational form_level0_cl(const CartanDatum &cd, const ClassicalWeight &lambda,
                        const ClassicalWeight &mu);

// --- classical layer ------------------------------------------------------

ClassicalWeight cl_simple_root(const CartanDatum &cd, int i);
ClassicalWeight cl_add(const ClassicalWeight &a, const ClassicalWeight &b);
ClassicalWeight cl_sub(const ClassicalWeight &a, const ClassicalWeight &b);
ClassicalWeight cl_scale(const ClassicalWeight &a, long long k);
ClassicalWeight cl_reflect(const CartanDatum &cd, int i, const ClassicalWeight &w);

// Lambda-coefficient vector of a classical-root-basis vector.
ClassicalWeight cl_from_root_coords(const CartanDatum &cd, const std::vector<long long> &coords);
// Inverse map for elements of the classical root lattice span; rational coords.
std::vector<Rational> root_coords_from_cl(const CartanDatum &cd, const ClassicalWeight &w);

// Form on the classical root-basis coordinates.
Rational cl_form_coords(const CartanDatum &cd, const std::vector<Rational> &x,
                        const std::vector<Rational> &y);

// c_alpha = max(1, (alpha,alpha)/2).
Rational c_alpha(const CartanDatum &cd, const ClassicalRoot &beta);

// Smallest positive multiple of cl(alpha)^vee lying in Qtilde.
ClassicalRoot tilde_alpha(const CartanDatum &cd, const ClassicalRoot &beta);

// Reduced root system {tilde_alpha}; deduplicated.
std::vector<ClassicalRoot> tilde_root_system(const CartanDatum &cd);

// Membership xi in Qtilde = Q_cl cap Q_cl^vee, over the classical root basis.
bool in_Qtilde(const CartanDatum &cd, const std::vector<long long> &xi);

// Level-zero lift of a classical-root-basis vector: sum_{j != i0} m_j alpha_j.
Weight lift_root_coords(const CartanDatum &cd, const std::vector<long long> &coords);

}  // namespace ckit
