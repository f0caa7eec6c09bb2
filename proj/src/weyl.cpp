#include "ckit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ckit {

namespace {

std::size_t dim(const CartanDatum &cd) { return static_cast<std::size_t>(cd.size()) + 1; }

std::vector<Rational> weight_vec(const Weight &w) {
  std::vector<Rational> v;
  v.reserve(w.lam.size() + 1);
  for (auto x : w.lam) v.emplace_back(x);
  v.push_back(w.delta);
  return v;
}

Weight weight_from_vec(const std::vector<Rational> &v) {
  Weight w;
  w.lam.resize(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w.lam[i] = to_ll(v[i]);
  w.delta = v.back();
  return w;
}

}  // namespace

WeylElement weyl_identity(const CartanDatum &cd) {
  return WeylElement{Mat<Rational>::identity(dim(cd))};
}

WeylElement simple_reflection(const CartanDatum &cd, int i) {
  // s_i(lambda) = lambda - <h_i, lambda> alpha_i
  std::size_t N = dim(cd);
  Mat<Rational> m = Mat<Rational>::identity(N);
  Weight ai = simple_root(cd, i);
  for (int j = 0; j < cd.size(); ++j) m(j, i) -= Rational(ai.lam[j]);
  m(N - 1, i) -= ai.delta;
  return WeylElement{m};
}

WeylElement compose(const WeylElement &a, const WeylElement &b) {
  return WeylElement{a.mat * b.mat};
}

WeylElement inverse(const WeylElement &w) { return WeylElement{mat_inverse(w.mat)}; }

WeylElement from_word(const CartanDatum &cd, const std::vector<int> &word) {
  WeylElement w = weyl_identity(cd);
  for (int i : word) w = compose(w, simple_reflection(cd, i));
  return w;
}

Weight act(const CartanDatum &cd, const WeylElement &w, const Weight &lambda) {
  (void)cd;
  return weight_from_vec(mat_apply(w.mat, weight_vec(lambda)));
}

Weight reflect(const CartanDatum &cd, int i, const Weight &lambda) {
  Weight r = lambda;
  long long h = lambda.lam[i];
  if (h == 0) return r;
  return sub(lambda, scale(simple_root(cd, i), h));
}

bool is_negative_root(const CartanDatum &cd, const Weight &beta) {
  RootDeltaDecomp dec = decompose_root_delta(cd, beta);
  if (dec.delta_coeff != 0) return dec.delta_coeff < 0;
  bool has_pos = false, has_neg = false;
  for (int i = 0; i < cd.size(); ++i) {
    if (dec.root_coeffs[i] > 0) has_pos = true;
    if (dec.root_coeffs[i] < 0) has_neg = true;
  }
  if (has_pos && has_neg) throw std::runtime_error("is_negative_root: mixed signs, not a root");
  if (!has_pos && !has_neg) throw std::runtime_error("is_negative_root: zero weight");
  return has_neg;
}

std::vector<int> reduced_word(const CartanDatum &cd, const WeylElement &w) {
  std::deque<int> out;
  WeylElement cur = w;
  WeylElement id = weyl_identity(cd);
  long long guard = 0;
  while (!(cur == id)) {
    if (++guard > 100000) throw std::runtime_error("reduced_word: did not terminate");
    int pick = -1;
    for (int i = 0; i < cd.size(); ++i) {
      Weight im = act(cd, cur, simple_root(cd, i));
      if (is_negative_root(cd, im)) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::runtime_error("reduced_word: no descent found");
    cur = compose(cur, simple_reflection(cd, pick));
    out.push_front(pick);
  }
  return std::vector<int>(out.begin(), out.end());
}

long long weyl_length(const CartanDatum &cd, const WeylElement &w) {
  return static_cast<long long>(reduced_word(cd, w).size());
}

WeylElement translation(const CartanDatum &cd, const TranslationVector &tv) {
  if (!in_Qtilde(cd, tv.xi)) throw std::invalid_argument("translation: xi not in Qtilde");
  // lambda + (delta,lambda) xi - (xi,lambda) delta - (xi,xi)/2 (delta,lambda) delta
  std::size_t N = dim(cd);
  Weight xiw = lift_root_coords(cd, tv.xi);
  std::vector<Rational> xic = root_coords_from_cl(cd, cl(xiw));
  Rational norm2 = cl_form_coords(cd, xic, xic);
  Mat<Rational> m = Mat<Rational>::identity(N);
  for (int j = 0; j < cd.size(); ++j) {
    // column j: image of Lambda_j
    Weight Lj = fundamental_weight(cd, j);
    Rational lev(cd.comarks[j]);
    Rational pair = form_root_side(cd, Lj, xiw);  // (xi, Lambda_j)
    for (int i = 0; i < cd.size(); ++i) m(i, j) += lev * Rational(xiw.lam[i]);
    m(N - 1, j) += lev * xiw.delta - pair - norm2 / 2 * lev;
  }
  // delta column: t(xi) delta = delta, already the identity there.
  return WeylElement{m};
}

TLengthForms translation_length_forms(const CartanDatum &cd, const TranslationVector &tv) {
  if (!in_Qtilde(cd, tv.xi)) throw std::invalid_argument("translation_length: xi not in Qtilde");
  std::vector<Rational> xic(tv.xi.size());
  for (std::size_t i = 0; i < tv.xi.size(); ++i) xic[i] = Rational(tv.xi[i]);
  TLengthForms f;
  f.by_positive_part = 0;
  f.by_absolute = 0;
  f.by_tilde = 0;
  for (const auto &beta : cd.cl_roots) {
    std::vector<Rational> bc(beta.coords.size());
    for (std::size_t i = 0; i < bc.size(); ++i) bc[i] = Rational(beta.coords[i]);
    Rational p = cl_form_coords(cd, bc, xic);
    Rational cb = c_alpha(cd, beta);
    if (p > 0) f.by_positive_part += p / cb;
    f.by_absolute += (p >= 0 ? p : -p) / cb / 2;
  }
  for (const auto &beta : tilde_root_system(cd)) {
    std::vector<Rational> bc(beta.coords.size());
    for (std::size_t i = 0; i < bc.size(); ++i) bc[i] = Rational(beta.coords[i]);
    Rational p = cl_form_coords(cd, bc, xic) * 2 / beta.norm2;  // (beta^vee, xi)
    if (p > 0) f.by_tilde += p;
  }
  return f;
}

long long translation_length(const CartanDatum &cd, const TranslationVector &tv) {
  TLengthForms f = translation_length_forms(cd, tv);
  if (f.by_positive_part != f.by_absolute || f.by_absolute != f.by_tilde)
    throw std::runtime_error("translation_length: the three forms disagree");
  return to_ll(f.by_positive_part);
}

ClassicalWeight cl_act(const CartanDatum &cd, const WeylElement &w, const ClassicalWeight &mu) {
  Weight lift;
  lift.lam = mu.coeffs;
  lift.delta = 0;
  return cl(act(cd, w, lift));
}

Decomposition decompose(const CartanDatum &cd, const WeylElement &w) {
  // Peel the classical part by descents on a regular dominant classical
  // weight; what remains acts trivially on P_cl modulo delta, so it is a
  // translation.
  Weight reg = zero_weight(cd);
  for (int i = 0; i < cd.size(); ++i)
    if (i != cd.i0) reg.lam[i] = 1;
  reg.lam[cd.zero_vee] -= level(cd, reg) - (cd.i0 == cd.zero_vee ? 0 : 0);
  // force level zero:
  reg = zero_weight(cd);
  for (int i = 0; i < cd.size(); ++i)
    if (i != cd.i0) reg.lam[i] = 1;
  {
    long long lv = level(cd, reg);
    reg.lam[cd.i0] -= lv;  // comark of i0 is >= 1; adjust to level 0 below
    while (level(cd, reg) > 0) reg.lam[cd.i0] -= 1;
    while (level(cd, reg) < 0) reg.lam[cd.i0] += 1;
  }
  WeylElement w0 = weyl_identity(cd);
  ClassicalWeight mu = cl_act(cd, w, cl(reg));
  long long guard = 0;
  while (true) {
    if (++guard > 100000) throw std::runtime_error("decompose: did not terminate");
    int pick = -1;
    for (int i = 0; i < cd.size(); ++i) {
      if (i == cd.i0) continue;
      if (mu.coeffs[i] < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    mu = cl_reflect(cd, pick, mu);
    w0 = compose(simple_reflection(cd, pick), w0);
  }
  // now cl_0(w0) = cl_0(w) on the regular vector => on all of P_cl
  WeylElement t = compose(w, inverse(w0));
  // read xi from the action on a level-one weight
  Weight L = fundamental_weight(cd, cd.zero_vee);
  Weight diff = sub(act(cd, t, L), L);
  std::vector<Rational> coords = root_coords_from_cl(cd, cl(diff));
  TranslationVector tv;
  tv.xi.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) tv.xi[i] = to_ll(coords[i]);
  if (!(compose(translation(cd, tv), w0) == w))
    throw std::runtime_error("decompose: recomposition failed");
  return Decomposition{w0, tv};
}

namespace {

bool dominance_scan(const CartanDatum &cd, const Weight &lambda, const WeylElement &w,
                    bool strict) {
  std::vector<int> word = reduced_word(cd, w);  // w = s_{word[0]} ... s_{word[l-1]}
  Weight mu = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    long long h = mu.lam[*it];
    if (h < 0 || (strict && h == 0)) return false;
    mu = reflect(cd, *it, mu);
  }
  return true;
}

}  // namespace

bool is_w_dominant(const CartanDatum &cd, const Weight &lambda, const WeylElement &w) {
  return dominance_scan(cd, lambda, w, false);
}

bool is_regularly_w_dominant(const CartanDatum &cd, const Weight &lambda, const WeylElement &w) {
  return dominance_scan(cd, lambda, w, true);
}

std::vector<Mat<Rational>> classical_weyl_group(const CartanDatum &cd) {
  std::size_t r = cd.cl_basis.size();
  // generators on root-basis coordinates
  std::vector<Mat<Rational>> gens;
  for (std::size_t a = 0; a < r; ++a) {
    Mat<Rational> g = Mat<Rational>::identity(r);
    int i = cd.cl_basis[a];
    for (std::size_t b = 0; b < r; ++b) {
      // s_i(cl alpha_j) = cl alpha_j - <h_i, alpha_j> cl alpha_i
      g(a, b) -= Rational(cd.cart[i][cd.cl_basis[b]]);
    }
    gens.push_back(g);
  }
  std::set<std::vector<Rational>> seen;
  std::vector<Mat<Rational>> out;
  std::deque<Mat<Rational>> queue;
  Mat<Rational> id = Mat<Rational>::identity(r);
  seen.insert(id.a);
  queue.push_back(id);
  while (!queue.empty()) {
    Mat<Rational> m = queue.front();
    queue.pop_front();
    out.push_back(m);
    for (auto &g : gens) {
      Mat<Rational> x = g * m;
      if (seen.insert(x.a).second) queue.push_back(x);
    }
  }
  return out;
}

std::map<WeylElement, long long> weyl_ball(const CartanDatum &cd, long long max_len) {
  std::map<WeylElement, long long> table;
  std::deque<WeylElement> frontier;
  WeylElement id = weyl_identity(cd);
  table[id] = 0;
  frontier.push_back(id);
  long long len = 0;
  while (!frontier.empty() && len < max_len) {
    ++len;
    std::deque<WeylElement> next;
    for (auto &w : frontier) {
      for (int i = 0; i < cd.size(); ++i) {
        WeylElement x = compose(w, simple_reflection(cd, i));
        if (table.emplace(x, len).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return table;
}

}  // namespace ckit
