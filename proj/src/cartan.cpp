#include "ckit/cartan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ckit {

namespace {

std::vector<std::vector<long long>> cyclic_cartan(int n) {
  // A_n^{(1)}, n >= 2: cycle on n+1 nodes.
  int N = n + 1;
  std::vector<std::vector<long long>> c(N, std::vector<long long>(N, 0));
  for (int i = 0; i < N; ++i) {
    c[i][i] = 2;
    c[i][(i + 1) % N] = -1;
    c[i][(i + N - 1) % N] = -1;
  }
  return c;
}

// Primitive positive integer null vector of an integer matrix with a
// one-dimensional kernel.
std::vector<long long> primitive_null(const std::vector<std::vector<long long>> &m) {
  std::size_t N = m.size();
  Mat<Rational> a(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a(i, j) = Rational(m[i][j]);
  auto ns = null_space(a);
  if (ns.size() != 1) throw std::runtime_error("cartan: kernel dimension != 1");
  Integer l = 1;
  for (auto &x : ns[0]) l = lcm(l, denominator(x));
  std::vector<Integer> v(N);
  Integer g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    v[i] = numerator(ns[0][i] * Rational(l));
    g = gcd(g, v[i]);
  }
  std::vector<long long> out(N);
  bool neg = false;
  for (auto &x : v)
    if (x < 0) neg = true;
  for (std::size_t i = 0; i < N; ++i) {
    Integer e = v[i] / g;
    if (neg) e = -e;
    if (e <= 0) throw std::runtime_error("cartan: null vector not positive");
    out[i] = static_cast<long long>(e);
  }
  return out;
}

std::vector<std::vector<long long>> transpose(const std::vector<std::vector<long long>> &m) {
  std::size_t N = m.size();
  std::vector<std::vector<long long>> t(N, std::vector<long long>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t[j][i] = m[i][j];
  return t;
}

void validate(const CartanDatum &cd) {
  int N = cd.size();
  for (int i = 0; i < N; ++i) {
    long long s = 0;
    for (int j = 0; j < N; ++j) s += cd.cart[i][j] * cd.marks[j];
    if (s != 0) throw std::runtime_error(cd.label + ": marks are not a null vector");
  }
  for (int j = 0; j < N; ++j) {
    long long s = 0;
    for (int i = 0; i < N; ++i) s += cd.comarks[i] * cd.cart[i][j];
    if (s != 0) throw std::runtime_error(cd.label + ": comarks are not a left null vector");
  }
  for (int i = 0; i < N; ++i) {
    if (cd.len2[i] != Rational(cd.comarks[i], cd.marks[i]))
      throw std::runtime_error(cd.label + ": comark/mark/length mismatch");
    static const Rational allowed[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2),
                                       Rational(1, 3)};
    bool ok = false;
    for (auto &v : allowed) ok = ok || cd.len2[i] == v;
    if (!ok) throw std::runtime_error(cd.label + ": root length out of range");
    if (cd.untwisted && !is_integral(Rational(2) / (Rational(2) * cd.len2[i])))
      throw std::runtime_error(cd.label + ": untwisted type needs 2/(a,a) integral");
    // symmetry of the induced form
    for (int j = 0; j < N; ++j) {
      if (Rational(cd.cart[i][j]) * cd.len2[i] != Rational(cd.cart[j][i]) * cd.len2[j])
        throw std::runtime_error(cd.label + ": symmetrized matrix not symmetric");
    }
  }
  if (cd.marks[cd.i0] != 1) throw std::runtime_error(cd.label + ": a_{i0} != 1");
  if (cd.comarks[cd.zero_vee] != 1) throw std::runtime_error(cd.label + ": a^vee_{0vee} != 1");
}

void finish(CartanDatum &cd) {
  int N = cd.size();
  cd.len2.resize(N);
  for (int i = 0; i < N; ++i) cd.len2[i] = Rational(cd.comarks[i], cd.marks[i]);
  Integer dl = 1;
  for (int i = 0; i < N; ++i) dl = lcm(dl, denominator(cd.len2[i]));
  cd.d = static_cast<long long>(dl);

  cd.cl_basis.clear();
  for (int i = 0; i < N; ++i)
    if (i != cd.i0) cd.cl_basis.push_back(i);
  std::size_t r = cd.cl_basis.size();
  cd.gram = Mat<Rational>(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      int i = cd.cl_basis[a], j = cd.cl_basis[b];
      cd.gram(a, b) = Rational(cd.cart[i][j]) * cd.len2[i];  // (alpha_i, alpha_j)
    }
  cd.gram_inv = mat_inverse(cd.gram);

  validate(cd);

  // Classical roots: W_cl-orbit closure of {cl(alpha_i) : i in I}.
  // cl(alpha_{i0}) = -sum_{j != i0} a_j cl(alpha_j) since a_{i0} = 1.
  auto form = [&](const std::vector<long long> &x, const std::vector<long long> &y) {
    Rational s = 0;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        if (x[a] && y[b]) s += Rational(x[a]) * cd.gram(a, b) * Rational(y[b]);
    return s;
  };
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < N; ++i) {
    std::vector<long long> v(r, 0);
    if (i == cd.i0) {
      for (std::size_t a = 0; a < r; ++a) v[a] = -cd.marks[cd.cl_basis[a]];
    } else {
      for (std::size_t a = 0; a < r; ++a) v[a] = (cd.cl_basis[a] == i) ? 1 : 0;
    }
    if (seen.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (std::size_t a = 0; a < r; ++a) {
      int i = cd.cl_basis[a];
      // s_i(v) = v - <h_i, v> cl(alpha_i), and <h_i, v> = (alpha_i, v)/len2_i
      Rational pr = 0;
      for (std::size_t b = 0; b < r; ++b)
        if (v[b]) pr += cd.gram(a, b) * Rational(v[b]);
      Rational h = pr / cd.len2[i];
      if (!is_integral(h)) throw std::runtime_error("cartan: non-integral reflection");
      auto w = v;
      w[a] -= to_ll(h);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  cd.cl_roots.clear();
  for (auto &v : seen) {
    ClassicalRoot cr;
    cr.coords = v;
    cr.norm2 = form(v, v);
    cd.cl_roots.push_back(cr);
  }
  std::sort(cd.cl_roots.begin(), cd.cl_roots.end());
}

CartanDatum make_A1_1() {
  CartanDatum cd;
  cd.label = "A1_1";
  cd.n = 1;
  cd.cart = {{2, -2}, {-2, 2}};
  cd.marks = {1, 1};
  cd.comarks = {1, 1};
  cd.i0 = 0;
  cd.zero_vee = 0;
  cd.admissible_i0 = {0, 1};
  cd.untwisted = true;
  finish(cd);
  return cd;
}

CartanDatum make_An_1(int n) {
  CartanDatum cd;
  cd.label = "A" + std::to_string(n) + "_1";
  cd.n = n;
  cd.cart = cyclic_cartan(n);
  cd.marks = primitive_null(cd.cart);
  cd.comarks = primitive_null(transpose(cd.cart));
  cd.i0 = 0;
  cd.zero_vee = 0;
  cd.admissible_i0.resize(n + 1);
  std::iota(cd.admissible_i0.begin(), cd.admissible_i0.end(), 0);
  cd.untwisted = true;
  finish(cd);
  return cd;
}

CartanDatum make_A2n_2(int n) {
  // Nodes 0..n; node 0 short, node n long; a = (2,...,2,1), a^vee = (1,2,...,2).
  CartanDatum cd;
  cd.label = "A" + std::to_string(2 * n) + "_2";
  cd.n = n;
  int N = n + 1;
  cd.cart.assign(N, std::vector<long long>(N, 0));
  for (int i = 0; i < N; ++i) cd.cart[i][i] = 2;
  if (n == 1) {
    cd.cart[0][1] = -4;
    cd.cart[1][0] = -1;
  } else {
    cd.cart[0][1] = -2;
    cd.cart[1][0] = -1;
    for (int i = 1; i < n - 1; ++i) {
      cd.cart[i][i + 1] = -1;
      cd.cart[i + 1][i] = -1;
    }
    cd.cart[n - 1][n] = -2;
    cd.cart[n][n - 1] = -1;
  }
  cd.marks = primitive_null(cd.cart);
  cd.comarks = primitive_null(transpose(cd.cart));
  cd.i0 = n;        // the long extremal node, a_n = 1
  cd.zero_vee = 0;  // the short extremal node, a_0^vee = 1
  cd.admissible_i0 = {0, n};
  cd.untwisted = false;
  finish(cd);
  return cd;
}

CartanDatum make_untwisted_chain(const std::string &family, int n) {
  // B_n^{(1)} (n>=3), C_n^{(1)} (n>=2), D_n^{(1)} (n>=4), Kac labelling.
  CartanDatum cd;
  cd.label = family + std::to_string(n) + "_1";
  cd.n = n;
  int N = n + 1;
  cd.cart.assign(N, std::vector<long long>(N, 0));
  for (int i = 0; i < N; ++i) cd.cart[i][i] = 2;
  auto link = [&](int i, int j, long long cij, long long cji) {
    cd.cart[i][j] = cij;
    cd.cart[j][i] = cji;
  };
  if (family == "B") {
    if (n < 3) throw std::runtime_error("B rank too small");
    link(0, 2, -1, -1);
    for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
    cd.cart[n - 1][n] = -1;  // node n is the short node
    cd.cart[n][n - 1] = -2;
  } else if (family == "C") {
    if (n < 2) throw std::runtime_error("C rank too small");
    // end nodes 0 and n are long, the chain inside is short
    link(0, 1, -1, -2);
    for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
    cd.cart[n - 1][n] = -2;
    cd.cart[n][n - 1] = -1;
  } else if (family == "D") {
    if (n < 4) throw std::runtime_error("D rank too small");
    link(0, 2, -1, -1);
    for (int i = 1; i < n - 2; ++i) link(i, i + 1, -1, -1);
    link(n - 2, n - 1, -1, -1);
    link(n - 2, n, -1, -1);
  } else {
    throw std::runtime_error("unknown family");
  }
  cd.marks = primitive_null(cd.cart);
  cd.comarks = primitive_null(transpose(cd.cart));
  cd.i0 = 0;
  cd.zero_vee = 0;
  cd.admissible_i0 = {0};
  cd.untwisted = true;
  finish(cd);
  return cd;
}

std::map<std::string, CartanDatum> &catalog() {
  static std::map<std::string, CartanDatum> cat;
  static std::once_flag once;
  std::call_once(once, [] {
    cat["A1_1"] = make_A1_1();
    for (int n = 2; n <= 8; ++n) cat["A" + std::to_string(n) + "_1"] = make_An_1(n);
    for (int n = 1; n <= 3; ++n) cat["A" + std::to_string(2 * n) + "_2"] = make_A2n_2(n);
    for (int n = 3; n <= 4; ++n) cat["B" + std::to_string(n) + "_1"] = make_untwisted_chain("B", n);
    for (int n = 2; n <= 4; ++n) cat["C" + std::to_string(n) + "_1"] = make_untwisted_chain("C", n);
    cat["D4_1"] = make_untwisted_chain("D", 4);
  });
  return cat;
}

}  // namespace

const CartanDatum &build_cartan(const std::string &label) {
  auto &cat = catalog();
  auto it = cat.find(label);
  if (it == cat.end()) throw std::invalid_argument("unknown affine type label: " + label);
  return it->second;
}

std::vector<std::string> cartan_catalog_labels() {
  std::vector<std::string> out;
  for (auto &[k, v] : catalog()) out.push_back(k);
  return out;
}

Weight zero_weight(const CartanDatum &cd) {
  Weight w;
  w.lam.assign(cd.size(), 0);
  return w;
}

Weight fundamental_weight(const CartanDatum &cd, int i) {
  Weight w = zero_weight(cd);
  w.lam[i] = 1;
  return w;
}

Weight simple_root(const CartanDatum &cd, int i) {
  Weight w = zero_weight(cd);
  for (int j = 0; j < cd.size(); ++j) w.lam[j] = cd.cart[j][i];
  w.delta = (i == cd.i0) ? Rational(1, cd.marks[cd.i0]) : Rational(0);
  return w;
}

Weight delta_weight(const CartanDatum &cd) {
  Weight w = zero_weight(cd);
  w.delta = 1;
  return w;
}

Weight varpi(const CartanDatum &cd, int i) {
  if (i == cd.zero_vee) throw std::invalid_argument("varpi is indexed by I minus the 0vee node");
  Weight w = zero_weight(cd);
  w.lam[i] = 1;
  w.lam[cd.zero_vee] -= cd.comarks[i];
  return w;
}

Weight rho_weight(const CartanDatum &cd) {
  // <h_i, rho> = 1 for all i; the delta coefficient is a free choice here
  // since no pairing this library exposes depends on it.
  Weight w = zero_weight(cd);
  for (int i = 0; i < cd.size(); ++i) w.lam[i] = 1;
  return w;
}

Weight add(const Weight &a, const Weight &b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.lam.size(); ++i) r.lam[i] += b.lam[i];
  r.delta += b.delta;
  return r;
}

Weight sub(const Weight &a, const Weight &b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.lam.size(); ++i) r.lam[i] -= b.lam[i];
  r.delta -= b.delta;
  return r;
}

Weight scale(const Weight &a, long long k) {
  Weight r = a;
  for (auto &x : r.lam) x *= k;
  r.delta *= k;
  return r;
}

long long level(const CartanDatum &cd, const Weight &w) {
  long long s = 0;
  for (int i = 0; i < cd.size(); ++i) s += cd.comarks[i] * w.lam[i];
  return s;
}

long long level(const CartanDatum &cd, const ClassicalWeight &w) {
  long long s = 0;
  for (int i = 0; i < cd.size(); ++i) s += cd.comarks[i] * w.coeffs[i];
  return s;
}

ClassicalWeight cl(const Weight &w) { return ClassicalWeight{w.lam}; }

RootDeltaDecomp decompose_root_delta(const CartanDatum &cd, const Weight &beta) {
  // Solve lam(beta) = C * m over the columns j != i0 (the remaining
  // ambiguity m -> m + t*marks is fixed by m_{i0} = 0).
  int N = cd.size();
  std::size_t r = cd.cl_basis.size();
  Mat<Rational> sys(N, r + 1);
  for (int i = 0; i < N; ++i) {
    for (std::size_t b = 0; b < r; ++b) sys(i, b) = Rational(cd.cart[i][cd.cl_basis[b]]);
    sys(i, r) = Rational(beta.lam[i]);
  }
  row_echelon(sys);
  // back-substitute: echelon has unit pivots
  std::vector<Rational> m(r, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < static_cast<std::size_t>(N); ++col) {
    if (sys(row, col) == Rational(1)) {
      m[col] = sys(row, r);
      ++row;
    }
  }
  // consistency check
  for (int i = 0; i < N; ++i) {
    Rational s = 0;
    for (std::size_t b = 0; b < r; ++b) s += Rational(cd.cart[i][cd.cl_basis[b]]) * m[b];
    if (s != Rational(beta.lam[i]))
      throw std::invalid_argument("weight is outside Q + Q*delta");
  }
  RootDeltaDecomp out;
  out.root_coeffs.assign(N, Rational(0));
  for (std::size_t b = 0; b < r; ++b) out.root_coeffs[cd.cl_basis[b]] = m[b];
  out.delta_coeff = beta.delta;  // alpha_j contribute 0 delta for j != i0
  return out;
}

Rational form_root_side(const CartanDatum &cd, const Weight &lambda, const Weight &beta) {
  RootDeltaDecomp dec = decompose_root_delta(cd, beta);
  Rational s = 0;
  for (int i = 0; i < cd.size(); ++i)
    if (dec.root_coeffs[i] != 0)
      s += dec.root_coeffs[i] * cd.len2[i] * Rational(lambda.lam[i]);
  s += dec.delta_coeff * Rational(level(cd, lambda));
  return s;
}

Rational form_level0_cl(const CartanDatum &cd, const ClassicalWeight &lambda,
                        const ClassicalWeight &mu) {
  if (level(cd, lambda) != 0 || level(cd, mu) != 0)
    throw std::invalid_argument("form_level0: weights must have level zero");
  std::size_t r = cd.cl_basis.size();
  std::vector<Rational> pl(r), pm(r);
  for (std::size_t b = 0; b < r; ++b) {
    int i = cd.cl_basis[b];
    pl[b] = cd.len2[i] * Rational(lambda.coeffs[i]);  // (alpha_i, lambda)
    pm[b] = cd.len2[i] * Rational(mu.coeffs[i]);
  }
  Rational s = 0;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) s += pl[a] * cd.gram_inv(a, b) * pm[b];
  return s;
}

Rational form_level0(const CartanDatum &cd, const Weight &lambda, const Weight &mu) {
  return form_level0_cl(cd, cl(lambda), cl(mu));
}

ClassicalWeight cl_simple_root(const CartanDatum &cd, int i) {
  return cl(simple_root(cd, i));
}

ClassicalWeight cl_add(const ClassicalWeight &a, const ClassicalWeight &b) {
  ClassicalWeight r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

ClassicalWeight cl_sub(const ClassicalWeight &a, const ClassicalWeight &b) {
  ClassicalWeight r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

ClassicalWeight cl_scale(const ClassicalWeight &a, long long k) {
  ClassicalWeight r = a;
  for (auto &x : r.coeffs) x *= k;
  return r;
}

ClassicalWeight cl_reflect(const CartanDatum &cd, int i, const ClassicalWeight &w) {
  ClassicalWeight r = w;
  long long h = w.coeffs[i];
  for (int j = 0; j < cd.size(); ++j) r.coeffs[j] -= h * cd.cart[j][i];
  return r;
}

ClassicalWeight cl_from_root_coords(const CartanDatum &cd, const std::vector<long long> &coords) {
  ClassicalWeight w;
  w.coeffs.assign(cd.size(), 0);
  for (std::size_t b = 0; b < cd.cl_basis.size(); ++b) {
    int j = cd.cl_basis[b];
    for (int i = 0; i < cd.size(); ++i) w.coeffs[i] += coords[b] * cd.cart[i][j];
  }
  return w;
}

std::vector<Rational> root_coords_from_cl(const CartanDatum &cd, const ClassicalWeight &w) {
  // (w, alpha_i) = len2_i * coeffs[i]; coords = gram_inv * pairings.
  if (level(cd, w) != 0)
    throw std::invalid_argument("root_coords_from_cl: not in the classical root span");
  std::size_t r = cd.cl_basis.size();
  std::vector<Rational> p(r);
  for (std::size_t b = 0; b < r; ++b)
    p[b] = cd.len2[cd.cl_basis[b]] * Rational(w.coeffs[cd.cl_basis[b]]);
  std::vector<Rational> x(r, 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) x[a] += cd.gram_inv(a, b) * p[b];
  // verify (the classical Lambda coefficients must reproduce w)
  for (int i = 0; i < cd.size(); ++i) {
    Rational s = 0;
    for (std::size_t b = 0; b < r; ++b) s += x[b] * Rational(cd.cart[i][cd.cl_basis[b]]);
    if (s != Rational(w.coeffs[i]))
      throw std::invalid_argument("root_coords_from_cl: not in the classical root span");
  }
  return x;
}

Rational cl_form_coords(const CartanDatum &cd, const std::vector<Rational> &x,
                        const std::vector<Rational> &y) {
  Rational s = 0;
  std::size_t r = cd.cl_basis.size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (x[a] != 0 && y[b] != 0) s += x[a] * cd.gram(a, b) * y[b];
  return s;
}

Rational c_alpha(const CartanDatum &cd, const ClassicalRoot &beta) {
  (void)cd;
  Rational half = beta.norm2 / 2;
  return half > 1 ? half : Rational(1);
}

ClassicalRoot tilde_alpha(const CartanDatum &cd, const ClassicalRoot &beta) {
  // coords of c_alpha * beta^vee = c_alpha * 2/(beta,beta) * beta, except the
  // A_{2n}^{(2)} special cases cl(alpha) resp. cl(alpha)/2.
  Rational f;
  if (!cd.untwisted) {
    f = (beta.norm2 == 4) ? Rational(1, 2) : Rational(1);
  } else {
    f = c_alpha(cd, beta) * 2 / beta.norm2;
  }
  ClassicalRoot out;
  out.coords.resize(beta.coords.size());
  for (std::size_t i = 0; i < beta.coords.size(); ++i) {
    Rational c = f * Rational(beta.coords[i]);
    if (!is_integral(c)) throw std::runtime_error("tilde_alpha: non-integral coordinates");
    out.coords[i] = to_ll(c);
  }
  out.norm2 = f * f * beta.norm2;
  return out;
}

std::vector<ClassicalRoot> tilde_root_system(const CartanDatum &cd) {
  std::set<std::vector<long long>> seen;
  std::vector<ClassicalRoot> out;
  for (auto &b : cd.cl_roots) {
    ClassicalRoot t = tilde_alpha(cd, b);
    if (seen.insert(t.coords).second) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_Qtilde(const CartanDatum &cd, const std::vector<long long> &xi) {
  // Qtilde is the lattice spanned by {tilde(alpha_i)}; solve over Z.
  auto tils = tilde_root_system(cd);
  // use the tilde images of the simple classical roots as a spanning set
  std::size_t r = cd.cl_basis.size();
  std::vector<std::vector<long long>> gens;
  for (std::size_t b = 0; b < r; ++b) {
    ClassicalRoot simple;
    simple.coords.assign(r, 0);
    simple.coords[b] = 1;
    int i = cd.cl_basis[b];
    simple.norm2 = cd.len2[i] * 2;
    gens.push_back(tilde_alpha(cd, simple).coords);
  }
  // solve sum c_b gens[b] = xi over the rationals, then check integrality
  Mat<Rational> sys(r, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t b = 0; b < r; ++b) sys(i, b) = Rational(gens[b][i]);
    sys(i, r) = Rational(xi[i]);
  }
  row_echelon(sys);
  std::vector<Rational> c(r, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < r; ++col)
    if (sys(row, col) == Rational(1)) c[col] = sys(row, r), ++row;
  for (std::size_t i = 0; i < r; ++i) {
    Rational s = 0;
    for (std::size_t b = 0; b < r; ++b) s += c[b] * Rational(gens[b][i]);
    if (s != Rational(xi[i])) return false;
  }
  for (auto &x : c)
    if (!is_integral(x)) return false;
  return true;
}

Weight lift_root_coords(const CartanDatum &cd, const std::vector<long long> &coords) {
  Weight w = zero_weight(cd);
  for (std::size_t b = 0; b < cd.cl_basis.size(); ++b)
    if (coords[b]) w = add(w, scale(simple_root(cd, cd.cl_basis[b]), coords[b]));
  return w;
}

}  // namespace ckit
