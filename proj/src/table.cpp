#include "kanrep/table.hpp"

#include <sstream>
#include <stdexcept>

namespace kanrep {

StructureTable::StructureTable(FieldContext field, std::vector<unsigned> parities, std::vector<std::string> labels)
    : field_(field), parities_(std::move(parities)), labels_(std::move(labels)) {
  for (auto& p : parities_) {
    if (p > 1) throw std::invalid_argument("parity must be 0 or 1");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < parities_.size(); ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != parities_.size()) throw std::invalid_argument("label count does not match dimension");
  products_.resize(parities_.size() * parities_.size());
}

std::optional<std::size_t> StructureTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void StructureTable::set_product(std::size_t i, std::size_t j, SparseVector value) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("product index out of range");
  canonicalize(value);
  const unsigned expected = parities_[i] ^ parities_[j];
  for (auto& [k, c] : value) {
    if (k >= dim()) throw std::out_of_range("product term index out of range");
    if (parities_[k] != expected) {
      throw std::invalid_argument("product " + labels_[i] + "*" + labels_[j] + " has a term " + labels_[k] +
                                  " of the wrong parity");
    }
    c = field_.coerce(c);
  }
  products_[i * dim() + j] = std::move(value);
}

void StructureTable::set_unit(std::optional<std::size_t> unit) {
  if (unit && *unit >= dim()) throw std::out_of_range("unit index out of range");
  if (unit && parities_[*unit] != 0) throw std::invalid_argument("unit must be even");
  unit_ = unit;
}

SparseVector StructureTable::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) add_scaled(out, product(i, j), a * b);
  }
  return out;
}

std::optional<unsigned> StructureTable::parity_of(const SparseVector& x) const {
  if (x.empty()) return 0U;
  const unsigned p = parities_.at(x.front().first);
  for (const auto& [i, c] : x) {
    if (parities_.at(i) != p) return std::nullopt;
  }
  return p;
}

Element::Element(const StructureTable& table, SparseVector coeffs) : table_(&table), coeffs_(std::move(coeffs)) {
  canonicalize(coeffs_);
  for (const auto& [i, c] : coeffs_) {
    if (i >= table.dim()) throw std::out_of_range("element index out of range");
  }
}

Element Element::basis(const StructureTable& table, std::size_t i, const Scalar& coeff) {
  return Element(table, unit_vector(i, table.field().coerce(coeff)));
}

Element& Element::operator+=(const Element& rhs) {
  if (rhs.table_ != table_) throw std::invalid_argument("elements of different algebras");
  add_scaled(coeffs_, rhs.coeffs_, Scalar(1));
  return *this;
}

std::string Element::to_string() const { return format_vector(coeffs_, table_->labels()); }

Element multiply(const Element& x, const Element& y) {
  if (&x.table() != &y.table()) throw std::invalid_argument("elements of different algebras");
  return Element(x.table(), x.table().multiply(x.coeffs(), y.coeffs()));
}

std::string format_vector(const SparseVector& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    os << '(' << c << ")*" << (i < labels.size() ? labels[i] : "#" + std::to_string(i));
    first = false;
  }
  return os.str();
}

StructureTable restrict_table(const StructureTable& table, const std::vector<std::size_t>& basis) {
  std::vector<std::size_t> position(table.dim(), SIZE_MAX);
  std::vector<unsigned> parities;
  std::vector<std::string> labels;
  for (std::size_t local = 0; local < basis.size(); ++local) {
    position.at(basis[local]) = local;
    parities.push_back(table.parity(basis[local]));
    labels.push_back(table.label(basis[local]));
  }
  StructureTable out(table.field(), parities, labels);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      SparseVector mapped;
      for (const auto& [k, c] : table.product(basis[a], basis[b])) {
        if (position[k] == SIZE_MAX) {
          throw std::invalid_argument("span is not closed: " + table.label(basis[a]) + "*" + table.label(basis[b]));
        }
        mapped.emplace_back(position[k], c);
      }
      out.set_product(a, b, std::move(mapped));
    }
  }
  if (table.unit() && position[*table.unit()] != SIZE_MAX) out.set_unit(position[*table.unit()]);
  return out;
}

}  // namespace kanrep
