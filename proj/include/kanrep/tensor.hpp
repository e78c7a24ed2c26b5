#pragma once

#include <vector>

#include "kanrep/action.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/report.hpp"

namespace kanrep {

/// F[t]/(t^N) with the derivation D(t^k) = -k alpha t^k.
struct TruncatedPolyAlgebra {
  unsigned N = 4;
  Scalar alpha;

  /// Basis t^0 .. t^{N-1}, all even, labels "t^k".
  StructureTable table(const FieldContext& field) const;
  /// Coefficient c with D(t^k) = c t^k.
  Scalar derivation_weight(unsigned k) const { return -alpha * Scalar(static_cast<std::int64_t>(k)); }
};

/// A linear map given by the images of the basis vectors.
using LinearMap = std::vector<SparseVector>;

SparseVector apply_map(const LinearMap& map, const SparseVector& x);

/// E(e_I) = (|I| - 1) e_I on G_n.
LinearMap graded_generalized_derivation(unsigned n, const FieldContext& field);

/// E(ab) = E(a)b + aE(b) - abE(1) and
/// E({p,q}) = {E(p),q} + {p,E(q)} + {p,q}E(1) on all basis pairs.
CheckReport check_generalized_derivation(const DotBracketAlgebra& algebra, const LinearMap& e,
                                         const CheckOptions& options = {});

/// P (x) A with the product (p (x) a)(q (x) b) = pq (x) ab and the bracket
///   <p (x) a, q (x) b> = {p,q} (x) ab + E(p)q (x) aD(b)
///                        - (-1)^{|p||q|} E(q)p (x) D(a)b.
/// Basis p (x) t^k sits at index p + dim(P) k with label "<p>*t^k" (the
/// unit of P is written "e[]").  Throws std::invalid_argument when P is not
/// Poisson or E fails the generalized-derivation laws.
DotBracketAlgebra jordan_bracket_tensor(const DotBracketAlgebra& p, const LinearMap& e, const TruncatedPolyAlgebra& a);

/// Kantor double of G_n (x) F[t]/(t^N) with the bracket above and the graded E.
StructureTable build_J_GnT_alpha(unsigned n, const Scalar& alpha, unsigned N, const FieldContext& field);

struct EmbeddingResult {
  /// Kan(n)-action on W = G_n (x) t + bar, basis e_I (x) t at index I and its
  /// bar at 2^n + I.
  BimoduleAction w_action;
  /// Row i is the image of the i-th basis vector of V(alpha) in W.
  SparseMatrix phi;
  /// The W-action transported back along phi.
  BimoduleAction transported;
  /// Entry-by-entry comparison of `transported` with the constructed V(alpha).
  CheckReport comparison;
  /// phi(v(I)) agrees with w R_b1 R_bei1 ... applied to w = e_{I_n} (x) t.
  bool word_images_agree = false;
  /// phi(bar v(I)) = sgn(sigma) bar(e_{I_n \ I} (x) t) equals phi(v(I)) R_b1.
  bool bar_images_agree = true;
  /// Parameter of the tensor algebra the embedding lives in: D(t) = -tensor_alpha t.
  Scalar tensor_alpha;
};

/// Extracts the action on W = G_n (x) t + bar inside J(G_n[t])_{-alpha}
/// (N = 2, so D(t) = alpha t) and compares it with
/// build_V_alpha(n, alpha, parity n mod 2) through
/// v(I) -> sgn(sigma) e_{I_n \ I} (x) t and the same sign on the bars, where
/// sigma orders I_n as (I_n \ I ascending, I descending).  Inside
/// J(G_n[t])_alpha itself R_b1^2 acts on W as -alpha.
EmbeddingResult embed_V_alpha(unsigned n, const Scalar& alpha, const FieldContext& field);

}  // namespace kanrep
