#include "kanrep/action.hpp"

#include <stdexcept>

namespace kanrep {

SparseVector BimoduleAction::act(const SparseVector& v, const SparseVector& x) const {
  SparseVector out;
  for (const auto& [a, c] : x) add_scaled(out, kanrep::apply(v, right.at(a)), c);
  return out;
}

SparseMatrix BimoduleAction::operator_of(const SparseVector& x) const {
  SparseMatrix out = SparseMatrix::zero(dim(), dim());
  for (const auto& [a, c] : x) out = add_scaled(out, right.at(a), c);
  return out;
}

std::optional<unsigned> BimoduleAction::parity_of(const SparseVector& v) const {
  if (v.empty()) return 0U;
  const unsigned p = vparity.at(v.front().first);
  for (const auto& [i, c] : v) {
    if (vparity.at(i) != p) return std::nullopt;
  }
  return p;
}

void BimoduleAction::validate() const {
  if (!algebra) throw std::invalid_argument("bimodule action without an algebra");
  if (right.size() != algebra->dim()) throw std::invalid_argument("need one operator per algebra basis element");
  if (!vlabels.empty() && vlabels.size() != dim()) throw std::invalid_argument("module label count mismatch");
  for (std::size_t a = 0; a < right.size(); ++a) {
    const auto& m = right[a];
    if (m.rows.size() != dim() || m.cols != dim()) throw std::invalid_argument("operator shape mismatch");
    for (std::size_t i = 0; i < dim(); ++i) {
      for (const auto& [j, c] : m.rows[i]) {
        if (j >= dim()) throw std::invalid_argument("operator entry out of range");
        if (vparity[j] != (vparity[i] ^ algebra->parity(a))) {
          throw std::invalid_argument("action of " + algebra->label(a) + " on module vector " + std::to_string(i) +
                                      " breaks parity");
        }
      }
    }
  }
}

}  // namespace kanrep
