#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfrb/group.hpp"
#include "hopfrb/linear_operator.hpp"
#include "hopfrb/report.hpp"

namespace hopfrb {

/// A finite-dimensional Hopf algebra presented by structure constants on a
/// fixed basis e_0..e_{n-1}:
///
///   mult    (i,j;k)  coefficient of e_k in e_i·e_j
///   unit    vector of the identity element
///   comult  (i;j,k)  coefficient of e_j⊗e_k in Δ(e_i)
///   counit  vector of ε(e_i)
///   antipode  matrix, column j = S(e_j)
///
/// Construction validates shapes and eagerly computes the commutativity and
/// cocommutativity flags.  The Hopf axioms themselves are checked by
/// verify_hopf (cached; shared across copies).
class FiniteHopfAlgebra {
public:
  struct Parts {
    Field field;
    std::vector<std::string> basis;
    SparseTensor mult;
    Vec unit;
    SparseTensor comult;
    Vec counit;
    LinearOperator antipode;
  };

  explicit FiniteHopfAlgebra(Parts parts);

  std::size_t dim() const { return basis_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const SparseTensor& mult_tensor() const { return mult_; }
  const SparseTensor& comult_tensor() const { return comult_; }
  const Vec& unit_vector() const { return unit_; }
  const Vec& counit_vector() const { return counit_; }
  const LinearOperator& antipode() const { return antipode_; }
  bool is_commutative() const { return commutative_; }
  bool is_cocommutative() const { return cocommutative_; }

  Vec zero_vec() const { return Vec({dim()}, field_); }
  Vec basis_vec(std::size_t i) const { return basis_vector(dim(), i, field_); }
  Vec unit() const { return unit_; }

  Vec multiply(const Vec& x, const Vec& y) const;
  /// Δ(x) as an arity-2 tensor.
  SparseTensor comult_of(const Vec& x) const;
  Scalar counit_of(const Vec& x) const;
  Vec antipode_of(const Vec& x) const { return antipode_.apply(x); }

  /// Full Hopf-axiom report; computed once and cached (copies share the cache).
  const VerificationReport& verify() const;
  bool verified_ok() const { return verify().pass(); }

private:
  Field field_;
  std::vector<std::string> basis_;
  SparseTensor mult_;
  Vec unit_;
  SparseTensor comult_;
  Vec counit_;
  LinearOperator antipode_;
  bool commutative_ = false;
  bool cocommutative_ = false;
  struct VerifyCache;
  std::shared_ptr<VerifyCache> cache_;
};

/// k[G]: basis = group elements, e_g e_h = e_{gh}, Δ(e_g) = e_g⊗e_g,
/// ε = 1, S(e_g) = e_{g^-1}.  Always cocommutative.
FiniteHopfAlgebra build_group_algebra(const FiniteGroup& g, const Field& f);

/// k^G: basis dual to the group elements, pointwise product, convolution
/// coproduct Δ(p_g) = Σ_{xy=g} p_x⊗p_y, 1 = Σ p_g, S(p_g) = p_{g^-1}.
/// Always commutative.
FiniteHopfAlgebra build_dual_group_algebra(const FiniteGroup& g, const Field& f);

/// Dual Hopf algebra on the dual basis: multiplication and comultiplication
/// tensors transposed into each other, unit ↔ counit, antipode transposed.
/// Requires the input to pass verify_hopf.
FiniteHopfAlgebra linear_dual(const FiniteHopfAlgebra& h);

/// Runs (or retrieves) the cached axiom suite: associativity, unit,
/// coassociativity, counit, bialgebra compatibilities, antipode.  Returned
/// by value so the result outlives a temporary argument.
VerificationReport verify_hopf(const FiniteHopfAlgebra& h);

/// x_1⊗…⊗x_n, expanded left-leaning by repeated (Δ⊗id⊗…).  legs >= 1.
SparseTensor iterated_comult(const FiniteHopfAlgebra& h, const Vec& x, std::size_t legs);

/// f(xy) = f(x)f(y) on all basis pairs and f(1) = 1.
VerificationReport is_algebra_map(const FiniteHopfAlgebra& dom, const FiniteHopfAlgebra& cod,
                                  const LinearOperator& f);

/// Δf = (f⊗f)Δ on all basis elements and ε∘f = ε.
VerificationReport is_coalgebra_map(const FiniteHopfAlgebra& dom, const FiniteHopfAlgebra& cod,
                                    const LinearOperator& f);

struct GrouplikeSet {
  std::vector<Vec> elements;
  /// True when dim > 8 and only basis vectors were inspected.
  bool basis_restricted = false;
};

/// All solutions of Δ(x) = x⊗x, ε(x) = 1 with coefficients in {-1, 0, 1}
/// (exhaustive for dim <= 8; basis vectors only beyond that).
GrouplikeSet grouplikes(const FiniteHopfAlgebra& h);

/// Multiplication table of the grouplike set.  Throws PreconditionError when
/// the set is not closed or fails the group laws.
FiniteGroup grouplike_group_structure(const FiniteHopfAlgebra& h);

/// Pretty-prints a vector as a signed combination of basis labels.
std::string element_str(const FiniteHopfAlgebra& h, const Vec& x);

/// Entrywise equality of all five structure pieces (labels ignored).
bool same_structure(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b);

}  // namespace hopfrb
