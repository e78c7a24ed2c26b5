#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanrep/action.hpp"
#include "kanrep/grassmann.hpp"
#include "kanrep/report.hpp"

namespace kanrep {

/// coefficient * R_{a_1} R_{a_2} ... applied left to right.
struct OperatorWord {
  Scalar coefficient = Scalar(1);
  std::vector<std::size_t> factors;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

SparseVector apply_word(const BimoduleAction& module, const SparseVector& v, const OperatorWord& word);
std::string word_to_string(const StructureTable& algebra, const OperatorWord& word);

/// Generator count n when the module's algebra is Kan(n); throws
/// std::invalid_argument otherwise.
unsigned kan_rank(const BimoduleAction& module);

/// Homogeneous basis (even vectors first) of the joint kernel of all R_{e_I}
/// and R_{be_I} with I nonempty.
std::vector<SparseVector> special_elements(const BimoduleAction& module);

/// v(I) = v R_{b1} R_{be_{i_1}} ... R_{b1} R_{be_{i_k}} for the listed order,
/// and its bar v(I) R_{b1}.
SparseVector word_vector(const BimoduleAction& module, const SparseVector& v, const std::vector<unsigned>& sequence,
                         bool bar);

/// b_I = v(I) with I ascending at index I, bar at index 2^n + I.
std::vector<SparseVector> adapted_basis(const BimoduleAction& module, const SparseVector& special);

/// Uncalibrated projection word onto the special line for v(I).
OperatorWord witness_word(unsigned n, Mask subset);
/// Uncalibrated projection word for the bar of v(I).  With
/// `alpha_invertible` the short form R_{b1} W(I) is used, otherwise the
/// construction through W(I + {i}).
OperatorWord witness_word_bar(unsigned n, Mask subset, bool alpha_invertible);

/// Smallest subspace containing the vectors and closed under every R_a, as
/// an echelon basis.
std::vector<SparseVector> closure(const BimoduleAction& module, const std::vector<SparseVector>& generators);

struct WitnessEntry {
  std::string target;
  OperatorWord word;
};

struct IrreducibilityResult {
  bool irreducible = false;
  SparseVector special_vector;
  /// One calibrated word per adapted basis vector: word(b_target) = special
  /// vector and word(b) = 0 for every other adapted basis vector.
  std::vector<WitnessEntry> witnesses;
  std::vector<SparseVector> adapted_basis;
  /// A proper nonzero invariant subspace when reducible.
  std::vector<SparseVector> subspace_basis;
};

/// Decides irreducibility of a unital Jordan Kan(n)-bimodule.  Throws
/// std::invalid_argument when no special element exists and
/// std::logic_error when neither a certificate nor a proper invariant
/// subspace can be produced.
IrreducibilityResult check_irreducible(const BimoduleAction& module);

struct ClassificationResult {
  unsigned v_parity = 0;
  Scalar alpha;
  SparseVector special_vector;
};

/// Parity of the special line and the eigenvalue of R_{b1}^2 on it.  Throws
/// std::invalid_argument unless the special line is one-dimensional and an
/// eigenline of R_{b1}^2.
ClassificationResult classify(const BimoduleAction& module);

struct IsomorphismResult {
  bool isomorphic = false;
  std::string reason;
  /// Row-vector matrix of the isomorphism in the two standard bases.
  std::optional<SparseMatrix> map;
};

/// Compares classifications; when they agree builds the map sending the
/// adapted basis of one module to that of the other and verifies
/// equivariance and parity on every basis pair (std::logic_error if that
/// fails).
IsomorphismResult check_isomorphic(const BimoduleAction& a, const BimoduleAction& b);

/// Applies every witness word to sum_k al^k b_k (b the adapted basis) and
/// checks that exactly al^k times the special vector comes back.  Needs a
/// constant alpha; al only carries the formal coefficients.
CheckReport check_basis_independence(const BimoduleAction& module);

/// Operator relations and action values on a Kan(n)-bimodule with a
/// one-dimensional special line v:
///  - supercommutators [R_eI, R_eJ], [R_eI, R_beJ] (|I n J| >= 2),
///    [R_eI, R_b1] (I not full), [R_beI, R_beJ] (I n J nonempty) vanish;
///  - R_a^2 = 0 for odd a != b1, R_a^3 = 0 for even a not in {1, be_i},
///    R_{be_i}^3 = R_{be_i}, R_{b1}^2 = alpha;
///  - R_{be_i} R_{b1} R_{be_i} = 0 and R_{be_i} R_{b1} R_{be_j} is
///    antisymmetric in (i, j);
///  - with v(I) built from v by words: the vanishing rules for J not in I
///    and the action values for J in I and |J \ I| = 1;
///  - the special line is one-dimensional.
CheckReport check_lemmas(const BimoduleAction& module, const CheckOptions& options = {});

}  // namespace kanrep
