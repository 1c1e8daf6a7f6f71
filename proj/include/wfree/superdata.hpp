#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfree/linalg.hpp"
#include "wfree/scalar.hpp"

namespace wfree {

struct InvalidDatum : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct JacobiFailure : InvalidDatum {
  using InvalidDatum::InvalidDatum;
};
struct FormNotInvariant : InvalidDatum {
  using InvalidDatum::InvalidDatum;
};
struct NotGoodGrading : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeMismatch : NotGoodGrading {
  using NotGoodGrading::NotGoodGrading;
};
struct NotSimpleRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index

// A basic Lie superalgebra with a fixed Cartan-Weyl basis. Basis indices
// 0..rank-1 are the Cartan elements h_i; the rest are root vectors e_alpha.
struct SuperRootDatum {
  std::string name;
  int rank = 0;
  int dim = 0;
  std::vector<std::string> names;
  std::vector<int> parity;                    // per basis index
  std::vector<std::vector<Rational>> weight;  // alpha(h_i); zero for Cartan
  std::vector<int> simple;                    // basis indices of simple roots
  std::vector<std::vector<Rational>> coords;  // coordinates in simple roots
  std::vector<std::vector<SparseVec>> br;     // br[a][b] = [e_a, e_b]
  std::vector<std::vector<Rational>> form;    // invariant form, (theta|theta)=2
  std::vector<int> negative;                  // index of -alpha, -1 for Cartan
  int theta = -1;                             // highest even root
  Rational h_dual;

  bool is_cartan(int a) const { return a < rank; }
  bool is_positive(int a) const;
  Rational c(int out, int a, int b) const;  // coefficient of e_out in [e_a,e_b]
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const;
  Rational pair(const SparseVec& u, const SparseVec& v) const;
  int index_of(const std::string& name) const;
  int root_index(const std::vector<Rational>& w) const;  // -1 if absent
  std::vector<std::vector<Rational>> ad(int a) const;  // matrix of ad e_a
  Rational killing(int a, int b) const;                // str(ad a ad b)
};

using DatumPtr = std::shared_ptr<const SuperRootDatum>;

// Validated construction from tables (Cartan weights, brackets, form).
// Fills coords, negative, theta and h_dual; throws InvalidDatum subtypes.
DatumPtr finalize_datum(SuperRootDatum d);

DatumPtr make_sl(int n);
DatumPtr make_osp1(int n);  // osp(1|2n)

struct GoodGrading {
  DatumPtr g;
  std::vector<int> labels2;  // doubled labels of the simple roots
  std::vector<int> deg2;     // doubled degree of each basis element
  SparseVec f;               // the nilpotent, sum of root vectors of degree -1
  std::vector<Rational> x;   // Cartan coordinates of the grading element

  std::vector<int> basis_of_degree(int j2) const;
  std::vector<int> basis_le(int j2) const;  // degree <= j2/2
  std::vector<int> basis_gt(int j2) const;  // degree > j2/2
  bool abelian_g0() const;                  // g_0 is the Cartan subalgebra
};

// labels2: doubled labels on simple roots; f_support: basis indices of the
// root vectors whose sum is f.
GoodGrading make_grading(DatumPtr g, std::vector<int> labels2, std::vector<int> f_support);

// Indecomposable elements of the positive roots of positive degree, grouped
// into classes modulo the root lattice of g_0.
struct RestrictedBase {
  std::vector<int> elements;              // basis indices
  std::vector<std::vector<int>> classes;  // each sorted, classes ordered by first member
  std::vector<int> class_deg2;
};

RestrictedBase restricted_base(const GoodGrading& gr);

// tau_k(u|v) = k(u|v) + 1/2 kappa_g(u|v) - 1/2 kappa_{g_0}(u|v) on g_0.
struct LevelForm {
  Level level;
  Matrix tau;                 // dim x dim, zero outside g_0 x g_0
  Scalar k_plus_hdual;
  std::vector<std::vector<Rational>> killing_g0;
};

LevelForm tau_form(const GoodGrading& gr, const Level& level);

std::vector<Rational> chi(const GoodGrading& gr);  // chi[a] = (f|e_a)

// Nullspace of ad f, split by degree and parity: one entry per basis vector
// of g^f, homogeneous in both.
struct CentralizerElement {
  int deg2;
  int parity;
  std::vector<Rational> vec;
};
std::vector<CentralizerElement> centralizer_f(const GoodGrading& gr);

struct Preset {
  std::string name;
  GoodGrading grading;
};

// sl2-regular, sl3-subregular, osp1_2-regular and the families
// sl<n>-regular, sl<n>-subregular, osp1_<2n>-regular.
Preset make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace wfree
