#include "wfree/superdata.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace wfree {

namespace {

using RMat = std::vector<std::vector<Rational>>;

RMat rzeros(int r, int c) { return RMat(r, std::vector<Rational>(c)); }

void add_to(SparseVec& v, int idx, const Rational& q) {
  if (q == 0) return;
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != v.end() && it->first == idx) {
    it->second += q;
    if (it->second == 0) v.erase(it);
  } else {
    v.insert(it, {idx, q});
  }
}

SparseVec scaled(const SparseVec& v, const Rational& q) {
  SparseVec r;
  if (q == 0) return r;
  for (const auto& [i, x] : v) r.emplace_back(i, x * q);
  return r;
}

void add_vec(SparseVec& acc, const SparseVec& v) {
  for (const auto& [i, x] : v) add_to(acc, i, x);
}

int sgn_parity(int p) { return (p & 1) ? -1 : 1; }

}  // namespace

// ---------------------------------------------------------------- datum

bool SuperRootDatum::is_positive(int a) const {
  if (is_cartan(a)) return false;
  for (const auto& x : coords[a])
    if (x != 0) return x > 0;
  return false;
}

Rational SuperRootDatum::c(int out, int a, int b) const {
  for (const auto& [i, x] : br[a][b])
    if (i == out) return x;
  return 0;
}

SparseVec SuperRootDatum::bracket(const SparseVec& u, const SparseVec& v) const {
  SparseVec r;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) add_vec(r, scaled(br[a][b], x * y));
  return r;
}

Rational SuperRootDatum::pair(const SparseVec& u, const SparseVec& v) const {
  Rational s = 0;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) s += x * y * form[a][b];
  return s;
}

int SuperRootDatum::index_of(const std::string& n) const {
  for (int i = 0; i < dim; ++i)
    if (names[i] == n) return i;
  return -1;
}

int SuperRootDatum::root_index(const std::vector<Rational>& w) const {
  for (int a = rank; a < dim; ++a)
    if (weight[a] == w) return a;
  return -1;
}

std::vector<std::vector<Rational>> SuperRootDatum::ad(int a) const {
  RMat m = rzeros(dim, dim);
  for (int b = 0; b < dim; ++b)
    for (const auto& [c, x] : br[a][b]) m[c][b] = x;
  return m;
}

Rational SuperRootDatum::killing(int a, int b) const {
  Rational s = 0;
  for (int c = 0; c < dim; ++c) {
    // (ad a ad b)_{cc} = sum_d ad(a)[c][d] * ad(b)[d][c]
    for (const auto& [d, y] : br[b][c]) {
      Rational x = this->c(c, a, d);
      if (x != 0) s += sgn_parity(parity[c]) * x * y;
    }
  }
  return s;
}

DatumPtr finalize_datum(SuperRootDatum d) {
  const int n = d.dim;
  if (n != static_cast<int>(d.names.size()) || n != static_cast<int>(d.parity.size()) ||
      n != static_cast<int>(d.weight.size()) || n != static_cast<int>(d.br.size()) ||
      n != static_cast<int>(d.form.size()))
    throw InvalidDatum("inconsistent table sizes");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(d.br[a].size()) != n || static_cast<int>(d.form[a].size()) != n ||
        static_cast<int>(d.weight[a].size()) != d.rank)
      throw InvalidDatum("inconsistent table sizes");
    if (a < d.rank && d.parity[a] != 0) throw InvalidDatum("odd Cartan element");
  }
  // Weights, parity and super-antisymmetry.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      SparseVec ab = d.br[a][b];
      SparseVec ba = scaled(d.br[b][a], -sgn_parity(d.parity[a] * d.parity[b]));
      if (ab != ba) throw InvalidDatum("bracket is not super-antisymmetric at " + d.names[a] + "," + d.names[b]);
      for (const auto& [c, x] : ab) {
        if (c < 0 || c >= n) throw InvalidDatum("bracket index out of range");
        if (d.parity[c] != ((d.parity[a] + d.parity[b]) & 1))
          throw InvalidDatum("bracket does not respect parity");
      }
    }
  }
  for (int i = 0; i < d.rank; ++i) {
    for (int a = 0; a < n; ++a) {
      SparseVec expect;
      if (a >= d.rank) add_to(expect, a, d.weight[a][i]);
      if (d.br[i][a] != expect)
        throw InvalidDatum("Cartan element " + d.names[i] + " does not act diagonally on " + d.names[a]);
    }
  }
  // Jacobi superidentity.
  auto adv = [&](int a, const SparseVec& v) {
    SparseVec r;
    for (const auto& [b, x] : v) add_vec(r, scaled(d.br[a][b], x));
    return r;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SparseVec lhs = adv(a, d.br[b][c]);
        SparseVec rhs;
        for (const auto& [e, x] : d.br[a][b]) add_vec(rhs, scaled(d.br[e][c], x));
        add_vec(rhs, scaled(adv(b, d.br[a][c]), sgn_parity(d.parity[a] * d.parity[b])));
        if (lhs != rhs)
          throw JacobiFailure("Jacobi identity fails on " + d.names[a] + "," + d.names[b] + "," + d.names[c]);
      }
  // Form: even, supersymmetric, invariant.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (d.form[a][b] != 0 && d.parity[a] != d.parity[b])
        throw FormNotInvariant("form is not even");
      if (d.form[a][b] != sgn_parity(d.parity[a] * d.parity[b]) * d.form[b][a])
        throw FormNotInvariant("form is not supersymmetric");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Rational l = 0, r = 0;
        for (const auto& [e, x] : d.br[a][b]) l += x * d.form[e][c];
        for (const auto& [e, x] : d.br[b][c]) r += x * d.form[a][e];
        if (l != r)
          throw FormNotInvariant("form not invariant on " + d.names[a] + "," + d.names[b] + "," + d.names[c]);
      }
  // Simple-root coordinates.
  if (static_cast<int>(d.simple.size()) != d.rank) throw InvalidDatum("need rank simple roots");
  Matrix sm = zero_matrix(d.rank, d.rank);
  for (int j = 0; j < d.rank; ++j) {
    int s = d.simple[j];
    if (s < d.rank || s >= n) throw InvalidDatum("simple root index out of range");
    for (int i = 0; i < d.rank; ++i) sm[i][j] = Scalar(d.weight[s][i]);
  }
  if (determinant(sm).is_zero()) throw InvalidDatum("simple roots are dependent");
  Matrix smi = inverse(sm);
  d.coords.assign(n, std::vector<Rational>(d.rank));
  for (int a = d.rank; a < n; ++a) {
    bool pos = false, neg = false;
    for (int j = 0; j < d.rank; ++j) {
      Scalar s;
      for (int i = 0; i < d.rank; ++i) s += smi[j][i] * Scalar(d.weight[a][i]);
      Rational q = s.constant();
      if (q.get_den() != 1) throw InvalidDatum("root not in the root lattice: " + d.names[a]);
      d.coords[a][j] = q;
      pos |= q > 0;
      neg |= q < 0;
    }
    if (pos == neg) throw InvalidDatum("root neither positive nor negative: " + d.names[a]);
  }
  d.negative.assign(n, -1);
  for (int a = d.rank; a < n; ++a) {
    std::vector<Rational> w = d.weight[a];
    for (auto& x : w) x = -x;
    d.negative[a] = d.root_index(w);
    if (d.negative[a] < 0) throw InvalidDatum("missing negative of " + d.names[a]);
  }
  // Highest even root.
  Rational best = -1;
  for (int a = d.rank; a < n; ++a) {
    if (d.parity[a] != 0 || !d.is_positive(a)) continue;
    Rational h = 0;
    for (const auto& x : d.coords[a]) h += x;
    if (h > best) {
      best = h;
      d.theta = a;
    }
  }
  if (d.theta < 0) throw InvalidDatum("no even positive root");
  Matrix bh = zero_matrix(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) bh[i][j] = Scalar(d.form[i][j]);
  if (determinant(bh).is_zero()) throw FormNotInvariant("form degenerate on the Cartan subalgebra");
  Vector th(d.rank);
  for (int i = 0; i < d.rank; ++i) th[i] = Scalar(d.weight[d.theta][i]);
  Vector t = solve(bh, th);
  Scalar tt;
  for (int i = 0; i < d.rank; ++i) tt += th[i] * t[i];
  if (tt != Scalar(2)) throw FormNotInvariant("form not normalized: (theta|theta) = " + tt.str());
  // Dual Coxeter number from the Killing form on the even part.
  bool found = false;
  for (int a = 0; a < n && !found; ++a)
    for (int b = 0; b < n && !found; ++b)
      if (d.parity[a] == 0 && d.form[a][b] != 0) {
        d.h_dual = d.killing(a, b) / (2 * d.form[a][b]);
        found = true;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d.parity[a] == 0 && d.parity[b] == 0 && d.killing(a, b) != 2 * d.h_dual * d.form[a][b])
        throw InvalidDatum("Killing form not proportional to the invariant form");
  return std::make_shared<const SuperRootDatum>(std::move(d));
}

// ---------------------------------------------------------------- realizations

namespace {

struct MatrixModel {
  int size;
  std::vector<int> index_parity;
  std::vector<RMat> basis;
  std::vector<int> parity;
  std::vector<std::string> names;
  int rank;
  std::vector<int> simple;
};

RMat unit(int n, int i, int j, const Rational& v = 1) {
  RMat m = rzeros(n, n);
  m[i][j] = v;
  return m;
}

RMat add(RMat a, const RMat& b, const Rational& s = 1) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
  return a;
}

RMat mul(const RMat& a, const RMat& b) {
  int n = static_cast<int>(a.size());
  RMat r = rzeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Rational supertrace(const RMat& m, const std::vector<int>& ip) {
  Rational s = 0;
  for (size_t i = 0; i < m.size(); ++i) s += sgn_parity(ip[i]) * m[i][i];
  return s;
}

DatumPtr realize(const std::string& name, const MatrixModel& mm) {
  const int dim = static_cast<int>(mm.basis.size());
  const int n = mm.size;
  // Coordinates: x = (A^T A)^{-1} A^T vec(M).
  Matrix gram = zero_matrix(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Rational s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += mm.basis[a][i][j] * mm.basis[b][i][j];
      gram[a][b] = Scalar(s);
    }
  Matrix gi = inverse(gram);
  auto coords_of = [&](const RMat& m) {
    std::vector<Rational> atv(dim);
    for (int a = 0; a < dim; ++a)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) atv[a] += mm.basis[a][i][j] * m[i][j];
    SparseVec out;
    RMat check = rzeros(n, n);
    for (int a = 0; a < dim; ++a) {
      Rational x = 0;
      for (int b = 0; b < dim; ++b)
        if (atv[b] != 0) x += gi[a][b].constant() * atv[b];
      if (x != 0) {
        out.emplace_back(a, x);
        check = add(check, mm.basis[a], x);
      }
    }
    if (check != m) throw InvalidDatum("matrix model not closed under bracket");
    return out;
  };
  SuperRootDatum d;
  d.name = name;
  d.rank = mm.rank;
  d.dim = dim;
  d.names = mm.names;
  d.parity = mm.parity;
  d.simple = mm.simple;
  d.br.assign(dim, std::vector<SparseVec>(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      RMat ab = mul(mm.basis[a], mm.basis[b]);
      RMat ba = mul(mm.basis[b], mm.basis[a]);
      d.br[a][b] = coords_of(add(ab, ba, -sgn_parity(mm.parity[a] * mm.parity[b])));
    }
  d.weight.assign(dim, std::vector<Rational>(mm.rank));
  for (int a = mm.rank; a < dim; ++a)
    for (int i = 0; i < mm.rank; ++i) d.weight[a][i] = d.c(a, i, a);
  RMat form = rzeros(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) form[a][b] = supertrace(mul(mm.basis[a], mm.basis[b]), mm.index_parity);
  // Rescale so that (theta|theta) = 2.
  int theta = -1;
  {
    SuperRootDatum tmp = d;
    tmp.form = form;
    // highest even root by height requires coordinates; compute directly.
    Matrix sm = zero_matrix(d.rank, d.rank);
    for (int j = 0; j < d.rank; ++j)
      for (int i = 0; i < d.rank; ++i) sm[i][j] = Scalar(d.weight[d.simple[j]][i]);
    Matrix smi = inverse(sm);
    Rational best = -1;
    for (int a = d.rank; a < dim; ++a) {
      if (d.parity[a]) continue;
      Rational h = 0;
      bool pos = true;
      for (int j = 0; j < d.rank; ++j) {
        Scalar s;
        for (int i = 0; i < d.rank; ++i) s += smi[j][i] * Scalar(d.weight[a][i]);
        Rational q = s.constant();
        if (q < 0) pos = false;
        h += q;
      }
      if (pos && h > best) {
        best = h;
        theta = a;
      }
    }
  }
  Matrix bh = zero_matrix(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) bh[i][j] = Scalar(form[i][j]);
  Vector th(d.rank);
  for (int i = 0; i < d.rank; ++i) th[i] = Scalar(d.weight[theta][i]);
  Vector t = solve(bh, th);
  Scalar tt;
  for (int i = 0; i < d.rank; ++i) tt += th[i] * t[i];
  Rational scale = 2 / tt.constant();  // (theta|theta) scales inversely with the form
  for (auto& row : form)
    for (auto& x : row) x /= scale;
  d.form = form;
  return finalize_datum(std::move(d));
}

}  // namespace

DatumPtr make_sl(int n) {
  if (n < 2) throw InvalidDatum("sl_n needs n >= 2");
  MatrixModel mm;
  mm.size = n;
  mm.index_parity.assign(n, 0);
  mm.rank = n - 1;
  for (int i = 0; i < n - 1; ++i) {
    mm.basis.push_back(add(unit(n, i, i), unit(n, i + 1, i + 1), -1));
    mm.parity.push_back(0);
    mm.names.push_back("h" + std::to_string(i + 1));
  }
  std::vector<std::pair<int, int>> pos;
  for (int h = 1; h < n; ++h)
    for (int i = 0; i + h < n; ++i) pos.emplace_back(i, i + h);
  auto push = [&](int i, int j) {
    mm.basis.push_back(unit(n, i, j));
    mm.parity.push_back(0);
    mm.names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  };
  for (auto [i, j] : pos) push(i, j);
  for (auto [i, j] : pos) push(j, i);
  for (int i = 0; i < n - 1; ++i) mm.simple.push_back(mm.rank + i);
  return realize("sl" + std::to_string(n), mm);
}

DatumPtr make_osp1(int n) {
  if (n < 1) throw InvalidDatum("osp(1|2n) needs n >= 1");
  const int N = 2 * n + 1;
  MatrixModel mm;
  mm.size = N;
  mm.index_parity.assign(N, 1);
  mm.index_parity[0] = 0;
  mm.rank = n;
  auto P = [&](int i) { return i; };      // e_i, i = 1..n
  auto Q = [&](int i) { return n + i; };  // e_{n+i}
  for (int i = 1; i <= n; ++i) {
    mm.basis.push_back(add(unit(N, P(i), P(i)), unit(N, Q(i), Q(i)), -1));
    mm.parity.push_back(0);
    mm.names.push_back("h" + std::to_string(i));
  }
  // Roots as (kind, i, j); kinds: eps_i - eps_j, eps_i + eps_j, 2 eps_i, eps_i.
  struct R {
    std::vector<int> w;  // coefficients of eps
    RMat m;
    int parity;
    std::string name;
  };
  std::vector<R> roots;
  auto eps = [&](std::initializer_list<std::pair<int, int>> t) {
    std::vector<int> w(n, 0);
    for (auto [i, c] : t) w[i - 1] += c;
    return w;
  };
  auto si = [](int i) { return std::to_string(i); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        roots.push_back({eps({{i, 1}, {j, -1}}), add(unit(N, P(i), P(j)), unit(N, Q(j), Q(i)), -1), 0,
                         "e[" + si(i) + "-" + si(j) + "]"});
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      RMat up = i == j ? unit(N, P(i), Q(i)) : add(unit(N, P(i), Q(j)), unit(N, P(j), Q(i)));
      RMat dn = i == j ? unit(N, Q(i), P(i)) : add(unit(N, Q(i), P(j)), unit(N, Q(j), P(i)));
      std::string tag = i == j ? "2*" + si(i) : si(i) + "+" + si(j);
      roots.push_back({eps({{i, 1}, {j, 1}}), up, 0, "e[" + tag + "]"});
      roots.push_back({eps({{i, -1}, {j, -1}}), dn, 0, "e[-" + tag + "]"});
    }
  for (int i = 1; i <= n; ++i) {
    roots.push_back({eps({{i, 1}}), add(unit(N, P(i), 0), unit(N, 0, Q(i)), -1), 1, "e[" + si(i) + "]"});
    roots.push_back({eps({{i, -1}}), add(unit(N, Q(i), 0), unit(N, 0, P(i))), 1, "e[-" + si(i) + "]"});
  }
  // Order: positive roots by height in the simple system eps_i - eps_{i+1}, eps_n,
  // then negatives in matching order.
  auto height = [&](const std::vector<int>& w) {
    // coordinate of beta_j is sum_{i<=j} w_i
    int h = 0, acc = 0;
    for (int j = 0; j < n; ++j) {
      acc += w[j];
      h += acc;
    }
    return h;
  };
  std::vector<R> positive, negative;
  for (auto& r : roots) (height(r.w) > 0 ? positive : negative).push_back(r);
  auto order = [&](const R& a, const R& b) {
    int ha = height(a.w), hb = height(b.w);
    if (ha != hb) return std::abs(ha) < std::abs(hb);
    return a.w > b.w;
  };
  std::stable_sort(positive.begin(), positive.end(), order);
  std::vector<R> neg_sorted;
  for (const auto& p : positive) {
    std::vector<int> w = p.w;
    for (auto& x : w) x = -x;
    for (const auto& q : negative)
      if (q.w == w) neg_sorted.push_back(q);
  }
  for (const auto* list : {&positive, &neg_sorted})
    for (const auto& r : *list) {
      mm.basis.push_back(r.m);
      mm.parity.push_back(r.parity);
      mm.names.push_back(r.name);
    }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> w = j < n ? eps({{j, 1}, {j + 1, -1}}) : eps({{n, 1}});
    for (size_t a = 0; a < positive.size(); ++a)
      if (positive[a].w == w) mm.simple.push_back(mm.rank + static_cast<int>(a));
  }
  return realize("osp1_" + std::to_string(2 * n), mm);
}

// ---------------------------------------------------------------- gradings

std::vector<int> GoodGrading::basis_of_degree(int j2) const {
  std::vector<int> r;
  for (int a = 0; a < g->dim; ++a)
    if (deg2[a] == j2) r.push_back(a);
  return r;
}

std::vector<int> GoodGrading::basis_le(int j2) const {
  std::vector<int> r;
  for (int a = 0; a < g->dim; ++a)
    if (deg2[a] <= j2) r.push_back(a);
  return r;
}

std::vector<int> GoodGrading::basis_gt(int j2) const {
  std::vector<int> r;
  for (int a = 0; a < g->dim; ++a)
    if (deg2[a] > j2) r.push_back(a);
  return r;
}

bool GoodGrading::abelian_g0() const {
  for (int a = g->rank; a < g->dim; ++a)
    if (deg2[a] == 0) return false;
  return true;
}

namespace {

// Rank of ad f : g_j -> g_{j-1}.
int adf_rank(const GoodGrading& gr, int j2) {
  const auto& g = *gr.g;
  auto src = gr.basis_of_degree(j2);
  auto dst = gr.basis_of_degree(j2 - 2);
  if (src.empty() || dst.empty()) return 0;
  Matrix m = zero_matrix(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (size_t c = 0; c < src.size(); ++c) {
    SparseVec img = g.bracket(gr.f, SparseVec{{src[c], 1}});
    for (const auto& [i, x] : img) {
      auto it = std::find(dst.begin(), dst.end(), i);
      if (it == dst.end()) throw DegreeMismatch("ad f does not lower degree by one");
      m[it - dst.begin()][c] = Scalar(x);
    }
  }
  return rank(m, static_cast<int>(src.size()));
}

}  // namespace

GoodGrading make_grading(DatumPtr gp, std::vector<int> labels2, std::vector<int> f_support) {
  const auto& g = *gp;
  if (static_cast<int>(labels2.size()) != g.rank)
    throw NotSimpleRoot("expected " + std::to_string(g.rank) + " labels, got " +
                        std::to_string(labels2.size()));
  GoodGrading gr;
  gr.g = gp;
  gr.labels2 = labels2;
  gr.deg2.assign(g.dim, 0);
  for (int a = g.rank; a < g.dim; ++a) {
    Rational s = 0;
    for (int j = 0; j < g.rank; ++j) s += g.coords[a][j] * labels2[j];
    gr.deg2[a] = static_cast<int>(s.get_num().get_si());
  }
  // Grading element x with alpha_j(x) = labels_j / 2.
  Matrix sm = zero_matrix(g.rank, g.rank);
  Vector rhs(g.rank);
  for (int j = 0; j < g.rank; ++j) {
    for (int i = 0; i < g.rank; ++i) sm[j][i] = Scalar(g.weight[g.simple[j]][i]);
    rhs[j] = Scalar(Rational(labels2[j], 2));
  }
  Vector x = solve(sm, rhs);
  for (const auto& s : x) gr.x.push_back(s.constant());
  for (int a : f_support) {
    if (a < g.rank || a >= g.dim) throw NotGoodGrading("f support must consist of root vectors");
    if (g.parity[a] != 0) throw NotGoodGrading("f must be even");
    if (gr.deg2[a] != -2)
      throw DegreeMismatch("f component " + g.names[a] + " has degree " +
                           to_string(Rational(gr.deg2[a], 2)) + ", not -1");
    add_to(gr.f, a, 1);
  }
  if (gr.f.empty()) throw NotGoodGrading("f is zero");
  int maxd = *std::max_element(gr.deg2.begin(), gr.deg2.end());
  for (int j2 = -maxd; j2 <= maxd; ++j2) {
    int dim_j = static_cast<int>(gr.basis_of_degree(j2).size());
    int dim_jm = static_cast<int>(gr.basis_of_degree(j2 - 2).size());
    int r = adf_rank(gr, j2);
    if (j2 >= 1 && r != dim_j)
      throw NotGoodGrading("ad f not injective on degree " + to_string(Rational(j2, 2)));
    if (j2 <= 1 && r != dim_jm)
      throw NotGoodGrading("ad f not surjective onto degree " + to_string(Rational(j2 - 2, 2)));
  }
  return gr;
}

RestrictedBase restricted_base(const GoodGrading& gr) {
  const auto& g = *gr.g;
  std::vector<int> dplus;
  for (int a = g.rank; a < g.dim; ++a)
    if (g.is_positive(a) && gr.deg2[a] > 0) dplus.push_back(a);
  RestrictedBase rb;
  for (int a : dplus) {
    bool decomposable = false;
    for (int b : dplus)
      for (int c : dplus) {
        std::vector<Rational> w(g.rank);
        for (int i = 0; i < g.rank; ++i) w[i] = g.weight[b][i] + g.weight[c][i];
        if (w == g.weight[a]) decomposable = true;
      }
    if (!decomposable) rb.elements.push_back(a);
  }
  // alpha ~ beta iff alpha - beta lies in the span of the simple roots of g_0.
  auto same_class = [&](int a, int b) {
    for (int j = 0; j < g.rank; ++j)
      if (gr.labels2[j] != 0 && g.coords[a][j] != g.coords[b][j]) return false;
    return true;
  };
  std::vector<bool> used(rb.elements.size(), false);
  for (size_t i = 0; i < rb.elements.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> cls;
    for (size_t j = i; j < rb.elements.size(); ++j)
      if (!used[j] && same_class(rb.elements[i], rb.elements[j])) {
        used[j] = true;
        cls.push_back(rb.elements[j]);
      }
    rb.class_deg2.push_back(gr.deg2[cls.front()]);
    rb.classes.push_back(std::move(cls));
  }
  return rb;
}

LevelForm tau_form(const GoodGrading& gr, const Level& level) {
  const auto& g = *gr.g;
  LevelForm lf;
  lf.level = level;
  lf.k_plus_hdual = level.k() + Scalar(g.h_dual);
  if (lf.k_plus_hdual.is_zero()) throw CriticalLevel("critical level k = -h^vee");
  auto g0 = gr.basis_of_degree(0);
  lf.killing_g0 = rzeros(g.dim, g.dim);
  for (int a : g0)
    for (int b : g0) {
      Rational s = 0;
      for (int c : g0)
        for (const auto& [d, y] : g.br[b][c]) {
          if (gr.deg2[d] != 0) continue;
          Rational x = g.c(c, a, d);
          if (x != 0) s += sgn_parity(g.parity[c]) * x * y;
        }
      lf.killing_g0[a][b] = s;
    }
  lf.tau = zero_matrix(g.dim, g.dim);
  for (int a : g0)
    for (int b : g0)
      lf.tau[a][b] = level.k() * Scalar(g.form[a][b]) +
                     Scalar(Rational(g.killing(a, b) - lf.killing_g0[a][b]) / 2);
  return lf;
}

std::vector<Rational> chi(const GoodGrading& gr) {
  const auto& g = *gr.g;
  std::vector<Rational> c(g.dim);
  for (int a = 0; a < g.dim; ++a) c[a] = g.pair(gr.f, SparseVec{{a, 1}});
  return c;
}

std::vector<CentralizerElement> centralizer_f(const GoodGrading& gr) {
  const auto& g = *gr.g;
  std::vector<CentralizerElement> out;
  int maxd = *std::max_element(gr.deg2.begin(), gr.deg2.end());
  for (int j2 = -maxd; j2 <= maxd; ++j2)
    for (int p = 0; p < 2; ++p) {
      std::vector<int> src;
      for (int a : gr.basis_of_degree(j2))
        if (g.parity[a] == p) src.push_back(a);
      if (src.empty()) continue;
      Matrix m = zero_matrix(g.dim, static_cast<int>(src.size()));
      for (size_t c = 0; c < src.size(); ++c)
        for (const auto& [i, x] : g.bracket(gr.f, SparseVec{{src[c], 1}})) m[i][c] = Scalar(x);
      for (const auto& v : nullspace(m, static_cast<int>(src.size()))) {
        CentralizerElement e{j2, p, std::vector<Rational>(g.dim)};
        for (size_t c = 0; c < src.size(); ++c) e.vec[src[c]] = v[c].constant();
        out.push_back(std::move(e));
      }
    }
  return out;
}

// ---------------------------------------------------------------- presets

Preset make_preset(const std::string& name) {
  std::smatch m;
  static const std::regex sl_re(R"(sl(\d+)-(regular|subregular))");
  static const std::regex osp_re(R"(osp1_(\d+)-regular)");
  if (std::regex_match(name, m, sl_re)) {
    int n = std::stoi(m[1]);
    bool sub = m[2] == "subregular";
    if (n < 2 || (sub && n < 3)) throw std::invalid_argument("unknown preset: " + name);
    DatumPtr g = make_sl(n);
    std::vector<int> labels(n - 1, 2), fs;
    if (sub) labels[0] = 0;
    for (int i = sub ? 1 : 0; i < n - 1; ++i) fs.push_back(g->negative[g->simple[i]]);
    return {name, make_grading(g, labels, fs)};
  }
  if (std::regex_match(name, m, osp_re)) {
    int two_n = std::stoi(m[1]);
    if (two_n < 2 || two_n % 2) throw std::invalid_argument("unknown preset: " + name);
    int n = two_n / 2;
    DatumPtr g = make_osp1(n);
    std::vector<int> labels(n, 2), fs;
    labels[n - 1] = 1;
    for (int i = 0; i < n - 1; ++i) fs.push_back(g->negative[g->simple[i]]);
    std::vector<Rational> w2 = g->weight[g->negative[g->simple[n - 1]]];
    for (auto& x : w2) x *= 2;
    fs.push_back(g->root_index(w2));
    return {name, make_grading(g, labels, fs)};
  }
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"sl2-regular", "sl3-regular", "sl3-subregular", "sl4-subregular", "osp1_2-regular",
          "osp1_4-regular"};
}

}  // namespace wfree
