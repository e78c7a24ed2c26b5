#include "kanrep/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanrep {

SparseVector unit_vector(std::size_t index, const Scalar& coeff) {
  if (coeff.is_zero()) return {};
  return SparseVector{{index, coeff}};
}

Scalar coefficient_at(const SparseVector& v, std::size_t index) {
  const auto it = std::lower_bound(v.begin(), v.end(), index,
                                   [](const auto& entry, std::size_t i) { return entry.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar();
}

void add_scaled(SparseVector& acc, const SparseVector& v, const Scalar& c) {
  if (c.is_zero() || v.empty()) return;
  SparseVector out;
  out.reserve(acc.size() + v.size());
  auto a = acc.begin();
  auto b = v.begin();
  while (a != acc.end() || b != v.end()) {
    if (b == v.end() || (a != acc.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == acc.end() || b->first < a->first) {
      Scalar s = b->second * c;
      if (!s.is_zero()) out.emplace_back(b->first, std::move(s));
      ++b;
    } else {
      Scalar s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

SparseVector scaled(const SparseVector& v, const Scalar& c) {
  SparseVector out;
  if (c.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    Scalar s = x * c;
    if (!s.is_zero()) out.emplace_back(i, std::move(s));
  }
  return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  add_scaled(out, b, Scalar(1));
  return out;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  add_scaled(out, b, Scalar(-1));
  return out;
}

void canonicalize(SparseVector& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& entry : v) {
    if (!out.empty() && out.back().first == entry.first) {
      out.back().second += entry.second;
    } else {
      out.push_back(std::move(entry));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  v = std::move(out);
}

void Accumulator::add(std::size_t index, const Scalar& c) {
  if (!used_[index]) {
    used_[index] = true;
    touched_.push_back(index);
    values_[index] = c;
  } else {
    values_[index] += c;
  }
}

void Accumulator::add_scaled(const SparseVector& v, const Scalar& c) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [i, x] : v) add(i, unit ? x : x * c);
}

SparseVector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  out.reserve(touched_.size());
  for (const auto i : touched_) {
    if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
    values_[i] = Scalar();
    used_[i] = false;
  }
  touched_.clear();
  return out;
}

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  return SparseMatrix{cols, std::vector<SparseVector>(rows)};
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i] = unit_vector(i);
  return m;
}

SparseVector apply(const SparseVector& x, const SparseMatrix& m) {
  SparseVector out;
  for (const auto& [i, c] : x) add_scaled(out, m.rows.at(i), c);
  return out;
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out = SparseMatrix::zero(a.rows.size(), b.cols);
  for (std::size_t i = 0; i < a.rows.size(); ++i) out.rows[i] = kanrep::apply(a.rows[i], b);
  return out;
}

SparseMatrix add_scaled(const SparseMatrix& a, const SparseMatrix& b, const Scalar& c) {
  if (a.rows.size() != b.rows.size() || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix out = a;
  for (std::size_t i = 0; i < a.rows.size(); ++i) kanrep::add_scaled(out.rows[i], b.rows[i], c);
  return out;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.rows.begin(), m.rows.end(), [](const SparseVector& r) { return r.empty(); });
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [i, c] : v) {
    const auto it = rows_.find(i);
    if (it != rows_.end()) add_scaled(out, it->second, -c);
  }
  return out;
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const auto pivot_it = std::find_if(r.begin(), r.end(), [](const auto& e) { return e.second.is_constant(); });
  if (pivot_it == r.end()) {
    throw std::domain_error("elimination requires a pivot that is a non-constant polynomial in al");
  }
  const std::size_t pivot = pivot_it->first;
  r = scaled(r, pivot_it->second.inverse());
  for (auto& [p, row] : rows_) {
    const Scalar c = coefficient_at(row, pivot);
    if (!c.is_zero()) add_scaled(row, r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVector> EchelonBasis::null_space() const {
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (rows_.count(f)) continue;
    SparseVector x{{f, Scalar(1)}};
    for (const auto& [p, row] : rows_) {
      const Scalar c = coefficient_at(row, f);
      if (!c.is_zero()) x.emplace_back(p, -c);
    }
    canonicalize(x);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<SparseVector> left_kernel(const std::vector<const SparseMatrix*>& ops,
                                      const std::vector<std::size_t>& support, std::size_t dim) {
  EchelonBasis equations(support.size());
  for (const SparseMatrix* m : ops) {
    std::vector<SparseVector> columns(m->cols);
    for (std::size_t local = 0; local < support.size(); ++local) {
      if (support[local] >= dim) throw std::out_of_range("kernel support index");
      for (const auto& [j, c] : m->rows.at(support[local])) columns[j].emplace_back(local, c);
    }
    for (auto& eq : columns) {
      if (!eq.empty()) equations.insert(eq);
    }
  }
  std::vector<SparseVector> out;
  for (const auto& local : equations.null_space()) {
    SparseVector global;
    for (const auto& [i, c] : local) global.emplace_back(support[i], c);
    canonicalize(global);
    out.push_back(std::move(global));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve_left(const std::vector<SparseVector>& basis, const SparseVector& x) {
  const std::size_t k = basis.size();
  std::size_t dim = 0;
  for (const auto& b : basis) {
    if (!b.empty()) dim = std::max(dim, b.back().first + 1);
  }
  if (!x.empty()) dim = std::max(dim, x.back().first + 1);
  std::vector<SparseVector> equations(dim);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [j, c] : basis[i]) equations[j].emplace_back(i, c);
  }
  for (const auto& [j, c] : x) equations[j].emplace_back(k, -c);
  EchelonBasis system(k + 1);
  for (auto& eq : equations) {
    if (!eq.empty()) system.insert(eq);
  }
  if (system.rows().count(k)) return std::nullopt;
  std::vector<Scalar> c(k);
  for (const auto& [p, row] : system.rows()) c[p] = -coefficient_at(row, k);
  return c;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t dim) {
  EchelonBasis e(dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace kanrep
