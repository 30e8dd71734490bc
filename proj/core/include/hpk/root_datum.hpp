#pragma once

#include <map>
#include <string>
#include <vector>

#include "hpk/lattice.hpp"
#include "hpk/rational.hpp"

namespace hpk {

struct CartanType {
  char family = 'A';  // A B C D G F
  int n = 1;
  std::string to_string() const;
  static CartanType parse(const std::string& tag);  // "B2", "G2", "F4"
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

enum class LatticeMode { Root, Weight, Explicit };
std::string to_string(LatticeMode m);

// Cartan matrix with entries A(i,j) = <alpha_j, alpha_i^v>, Bourbaki numbering.
IntMatrix cartan_matrix(const CartanType& t);

struct RootDatum {
  std::string name;
  LatticeMode mode = LatticeMode::Explicit;
  IntMatrix lattice_basis;  // columns: basis of X in fundamental-weight coordinates (built data only)

  int dim = 0;   // rank of X
  int rank = 0;  // |F0|

  // roots[0..npos) positive ordered by height then descending coefficient vector;
  // roots[npos + k] = -roots[k]; roots[i] for i < rank are the simple roots in order.
  std::vector<IntVector> roots;          // X coordinates
  std::vector<IntVector> coroots;        // dual (Y) coordinates
  std::vector<IntVector> root_coeffs;    // in simple roots
  std::vector<IntVector> coroot_coeffs;  // in simple coroots
  int npos = 0;
  std::vector<int> neg;
  std::vector<bool> doubled;   // coroot lies in 2Y
  std::vector<int> component;  // irreducible component per root
  int ncomponents = 0;
  std::vector<int> orbit;      // W0-orbit id per root
  int norbits = 0;
  std::vector<std::vector<int>> simple_perm;  // simple_perm[i][a] = index of s_i(root a)
  std::vector<Rational> sq_length;             // invariant squared length per root
  std::map<IntVector, int> index;

  int nroots() const { return static_cast<int>(roots.size()); }
  bool positive(int a) const { return a < npos; }
  int find(const IntVector& x) const;  // -1 if absent
  Int pair(const IntVector& x, int a) const { return dot(x, coroots[a]); }
  Int cartan(int i, int j) const { return dot(roots[j], coroots[i]); }
  IntMatrix reflection_matrix(int a) const;  // on X
  int height(int a) const;
  bool semisimple() const { return dim == rank; }
  // index |X : Q(R0)| when semisimple
  mpz_class index_over_root_lattice() const;
  // roots of the component whose coroot is the highest coroot
  std::vector<int> highest_short_roots() const;
  std::string root_label(int a) const;  // coefficient string like "1,2"
};

// Generic construction from simple roots (X coordinates) and simple coroots (Y coordinates).
RootDatum make_datum(const std::string& name, int dim, const std::vector<IntVector>& simple_roots,
                     const std::vector<IntVector>& simple_coroots);

// lattice_basis: columns in fundamental-weight coordinates (required for Explicit mode).
RootDatum build_datum(const CartanType& type, LatticeMode mode, const IntMatrix& lattice_basis = IntMatrix());

struct WeylElement {
  IntMatrix mat;            // action on X
  IntMatrix inv_transpose;  // action on T coordinates and on Y
  std::vector<int> perm;    // action on roots
  std::vector<int> word;    // lexicographically minimal reduced word (simple indices)
  int length = 0;
};

std::vector<WeylElement> weyl_elements(const RootDatum& d, int rank_cap = 5);
WeylElement compose(const RootDatum& d, const WeylElement& a, const WeylElement& b);
WeylElement identity_element(const RootDatum& d);
WeylElement inverse_element(const RootDatum& d, const WeylElement& a);
int length_of(const RootDatum& d, const std::vector<int>& perm);
int longest_index(const std::vector<WeylElement>& W);

// w = t_x u acting on X by v -> u v + x
struct AffineElement {
  WeylElement u;
  IntVector x;
};

AffineElement affine_compose(const RootDatum& d, const AffineElement& a, const AffineElement& b);
Int affine_length(const RootDatum& d, const AffineElement& w);

struct NormValue {
  Int length = 0;
  Rational central_sq = 0;  // squared norm of the component of w(0) orthogonal to Q
  double value() const;
};
NormValue norm_N(const RootDatum& d, const AffineElement& w);
// invariant bilinear form on X tensor Q
Rational inner_product(const RootDatum& d, const IntVector& x, const IntVector& y);

// Labels: q_{alpha^v} = q^{f[a]}, q_{alpha^v/2} = q^{g[a]} (g = 0 unless doubled).
struct LabelFunction {
  std::vector<Rational> f;
  std::vector<Rational> g;
  Rational odd(int a) const { return f[a] + g[a]; }  // exponent of q_{alpha^v + 1}
  friend bool operator==(const LabelFunction&, const LabelFunction&) = default;
};

struct AffineNode {
  std::string id;  // "0", "1".. for irreducible data; "0.c" for the affine node of component c
  int orbit = 0;
  bool even = false;  // label class of (alpha^v, k) with k even
  int simple = -1;    // simple root index, -1 for affine nodes
  int root = -1;      // root a with affine simple root (±a^v, k)
};

std::vector<AffineNode> affine_nodes(const RootDatum& d);
LabelFunction labels_from_nodes(const RootDatum& d, const std::map<std::string, Rational>& node_f);
LabelFunction equal_labels(const RootDatum& d, const Rational& f = 1);
std::map<std::string, Rational> node_labels(const RootDatum& d, const LabelFunction& q);
// classes of affine nodes that are W-conjugate (same label class)
std::vector<std::vector<std::string>> node_classes(const RootDatum& d);

Rational q_of_w(const RootDatum& d, const LabelFunction& q, const WeylElement& w);
Rational q_of_affine(const RootDatum& d, const LabelFunction& q, const AffineElement& w);
Rational q_of_longest(const RootDatum& d, const LabelFunction& q);
// product of q_{alpha^v} over R_nr,+ restricted to the given root subset
Rational q_of_subsystem(const RootDatum& d, const LabelFunction& q, const std::vector<int>& roots);

struct ParabolicClass {
  std::vector<int> simple;               // standard representative, simple-root positions
  std::vector<int> roots;                // R_P
  std::vector<std::vector<int>> members; // all conjugate standard subsets
};

std::vector<ParabolicClass> parabolic_classes(const RootDatum& d, const std::vector<WeylElement>& W);
std::vector<int> parabolic_roots(const RootDatum& d, const std::vector<int>& simple);

// Quotient datum R_P = (X_P, Y_P, R_P, R_P^v, P) together with the embedding T_P -> T.
struct QuotientDatum {
  RootDatum datum;
  std::vector<int> root_map;  // datum root index -> parent root index
  IntMatrix basis;            // |P| x |P|: columns span the image of X in Z^P (pairings with P^v)
  IntMatrix pullback;         // |P| x dim: coordinates of the image of each X basis vector
};

QuotientDatum quotient_datum(const RootDatum& d, const std::vector<int>& simple);
// Full-lattice datum R^P = (X, Y, R_P, R_P^v, P)
RootDatum full_subdatum(const RootDatum& d, const std::vector<int>& simple);
LabelFunction restrict_labels(const LabelFunction& q, const std::vector<int>& root_map);

std::string datum_to_json(const RootDatum& d, const LabelFunction* q = nullptr);
struct DatumSpec {
  CartanType type;
  LatticeMode mode = LatticeMode::Root;
  IntMatrix basis;
  std::map<std::string, Rational> node_f;  // empty => not specified
};
DatumSpec datum_spec_from_json(const std::string& text);

}  // namespace hpk
