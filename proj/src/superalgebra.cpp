#include "kanrep/superalgebra.hpp"

#include <stdexcept>

#include "kanrep/parallel.hpp"

namespace kanrep {

namespace {

std::vector<std::pair<std::string, Scalar>> labelled(const SparseVector& v, const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, Scalar>> out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i < labels.size() ? labels[i] : "#" + std::to_string(i), c);
  return out;
}

std::vector<std::string> labels_of(const StructureTable& t, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (const auto i : idx) out.push_back(t.label(i));
  return out;
}

Scalar signed_coeff(const Scalar& c, unsigned exponent) { return (exponent & 1U) ? -c : c; }

bool tail_is_square_zero_ideal(const StructureTable& t, std::size_t from) {
  const std::size_t d = t.dim();
  if (from >= d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const bool i_tail = i >= from;
      const bool j_tail = j >= from;
      if (!i_tail && !j_tail) continue;
      const auto& p = t.product(i, j);
      if (i_tail && j_tail && !p.empty()) return false;
      for (const auto& [k, c] : p) {
        if (k < from) return false;
      }
    }
  }
  return true;
}

}  // namespace

CheckReport check_table_invariants(const StructureTable& table, const CheckOptions& options) {
  const std::size_t d = table.dim();
  return run_partitioned("table invariants", d, options, [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        sink.count_case();
        SparseVector bad;
        for (const auto& [k, c] : table.product(i, j)) {
          if (table.parity(k) != (table.parity(i) ^ table.parity(j))) bad.emplace_back(k, c);
        }
        if (!bad.empty()) {
          sink.record([&] { return Violation{"parity", {i, j}, labels_of(table, {i, j}), labelled(bad, table.labels())}; });
        }
      }
      if (const auto u = table.unit()) {
        const SparseVector expected = unit_vector(i, table.field().one());
        for (const bool left : {true, false}) {
          const auto& got = left ? table.product(*u, i) : table.product(i, *u);
          if (got != expected) {
            sink.record([&] {
              return Violation{left ? "unit-left" : "unit-right", {i}, labels_of(table, {i}),
                               labelled(got - expected, table.labels())};
            });
          }
        }
      }
    }
  });
}

CheckReport check_supercommutative(const StructureTable& table, const CheckOptions& options) {
  const std::size_t d = table.dim();
  return run_partitioned("supercommutativity", d, options, [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        sink.count_case();
        SparseVector r = table.product(i, j);
        add_scaled(r, table.product(j, i), (table.parity(i) & table.parity(j)) ? Scalar(1) : Scalar(-1));
        if (!r.empty()) {
          sink.record([&] { return Violation{"supercommutativity", {i, j}, labels_of(table, {i, j}), labelled(r, table.labels())}; });
        }
      }
    }
  });
}

CheckReport check_jordan_superidentity(const StructureTable& table, const CheckOptions& options) {
  const std::size_t d = table.dim();
  const auto& par = table.parities();

  // (ab)c for all basis triples.
  std::vector<SparseVector> triple(d * d * d);
  {
    Accumulator acc(d);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const auto& ab = table.product(a, b);
        if (ab.empty()) continue;
        for (std::size_t c = 0; c < d; ++c) {
          for (const auto& [k, coef] : ab) acc.add_scaled(table.product(k, c), coef);
          triple[(a * d + b) * d + c] = acc.take();
        }
      }
    }
  }
  std::optional<std::size_t> tail;
  if (options.square_zero_ideal_from && tail_is_square_zero_ideal(table, *options.square_zero_ideal_from)) {
    tail = options.square_zero_ideal_from;
  }

  return run_partitioned("jordan superidentity", d, options, [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    Accumulator acc(d);
    auto times_basis = [&](const SparseVector& u, std::size_t last, unsigned sign) {
      for (const auto& [k, c] : u) acc.add_scaled(table.product(k, last), signed_coeff(c, sign));
    };
    auto times_vector = [&](const SparseVector& u, const SparseVector& w, unsigned sign) {
      for (const auto& [i, a] : u) {
        for (const auto& [j, b] : w) acc.add_scaled(table.product(i, j), signed_coeff(a * b, sign));
      }
    };
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        for (std::size_t z = 0; z < d; ++z) {
          for (std::size_t t = 0; t < d; ++t) {
            if (tail) {
              const unsigned in_tail = (x >= *tail) + (y >= *tail) + (z >= *tail) + (t >= *tail);
              if (in_tail >= 2) continue;
            }
            sink.count_case();
            const unsigned px = par[x], py = par[y], pz = par[z], pt = par[t];
            times_basis(triple[(x * d + y) * d + z], t, 0);
            times_basis(triple[(x * d + t) * d + z], y, (py & pz) ^ (py & pt) ^ (pz & pt));
            times_basis(triple[(y * d + t) * d + z], x, (px & py) ^ (px & pz) ^ (px & pt) ^ (pz & pt));
            times_vector(table.product(x, y), table.product(z, t), 1);
            times_vector(table.product(x, z), table.product(y, t), 1 ^ (py & pz));
            times_vector(table.product(x, t), table.product(y, z), 1 ^ (pt & (py ^ pz)));
            SparseVector residual = acc.take();
            if (!residual.empty()) {
              sink.record([&] {
                return Violation{"jordan", {x, y, z, t}, labels_of(table, {x, y, z, t}), labelled(residual, table.labels())};
              });
            }
          }
        }
      }
    }
  });
}

CheckReport check_super_associator_identity(const StructureTable& table, const CheckOptions& options) {
  const std::size_t d = table.dim();
  const auto& par = table.parities();
  std::vector<SparseVector> assoc(d * d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        const SparseVector ea = unit_vector(a), ec = unit_vector(c);
        assoc[(a * d + b) * d + c] = table.multiply(table.product(a, b), ec) - table.multiply(ea, table.product(b, c));
      }
    }
  }
  return run_partitioned("super-associator identity", d, options,
                         [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    Accumulator acc(d);
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t dd = 0; dd < d; ++dd) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t c = 0; c < d; ++c) {
            sink.count_case();
            for (const auto& [k, x] : assoc[(a * d + dd) * d + b]) acc.add_scaled(table.product(k, c), x);
            for (const auto& [k, x] : table.product(dd, c)) {
              acc.add_scaled(assoc[(a * d + k) * d + b], signed_coeff(x, 1 ^ (par[b] & par[c])));
            }
            for (const auto& [k, x] : assoc[(a * d + c) * d + b]) {
              acc.add_scaled(table.product(dd, k), signed_coeff(x, (par[a] & par[dd]) ^ (par[b] & par[c])));
            }
            SparseVector residual = acc.take();
            if (!residual.empty()) {
              sink.record([&] {
                return Violation{"super-associator", {a, dd, b, c}, labels_of(table, {a, dd, b, c}),
                                 labelled(residual, table.labels())};
              });
            }
          }
        }
      }
    }
  });
}

CheckReport check_operator_relations(const BimoduleAction& action, const CheckOptions& options) {
  action.validate();
  const StructureTable& table = *action.algebra;
  const std::size_t d = table.dim();
  const std::size_t m = action.dim();
  const auto& par = table.parities();
  std::vector<std::string> vlabels = action.vlabels;
  if (vlabels.empty()) {
    for (std::size_t i = 0; i < m; ++i) vlabels.push_back("v" + std::to_string(i));
  }
  auto record = [&](ViolationSink& sink, const char* relation, std::size_t a, std::size_t b, std::size_t c,
                    std::size_t i, const SparseVector& residual) {
    sink.record([&] {
      return Violation{relation, {a, b, c, i}, {table.label(a), table.label(b), table.label(c), vlabels[i]},
                       labelled(residual, vlabels)};
    });
  };
  CheckReport report = run_partitioned("operator relations", d, options,
                                       [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      for (std::size_t z = 0; z < d; ++z) {
        for (std::size_t t = 0; t < d; ++t) {
          const SparseVector yt_z = table.multiply(table.product(y, t), unit_vector(z));
          const auto& zt = table.product(z, t);
          const auto& yt = table.product(y, t);
          const auto& yz = table.product(y, z);
          const unsigned py = par[y], pz = par[z], pt = par[t];
          for (std::size_t i = 0; i < m; ++i) {
            sink.count_case();
            const auto& vy = action.R(y).rows[i];
            const auto& vz = action.R(z).rows[i];
            const auto& vt = action.R(t).rows[i];
            SparseVector r = action.act(action.act(vy, z), t);
            add_scaled(r, action.act(action.act(vt, z), y), sign_scalar((py & pz) ^ (py & pt) ^ (pz & pt)));
            add_scaled(r, action.act(unit_vector(i), yt_z), sign_scalar(pz & pt));
            add_scaled(r, action.act(vy, zt), Scalar(-1));
            add_scaled(r, action.act(vz, yt), -sign_scalar(py & pz));
            add_scaled(r, action.act(vt, yz), -sign_scalar(pt & (py ^ pz)));
            if (!r.empty()) record(sink, "operator-cubic", y, z, t, i, r);
          }
        }
      }
    }
  });
  CheckReport commutator = run_partitioned("operator relations", d, options,
                                           [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        for (std::size_t z = 0; z < d; ++z) {
          const auto& xy = table.product(x, y);
          const auto& xz = table.product(x, z);
          const auto& yz = table.product(y, z);
          const unsigned px = par[x], py = par[y], pz = par[z];
          // [R_u, R_w]_s applied to v, u an algebra vector of parity pu, w a basis index.
          auto supercommutator = [&](const SparseVector& v, const SparseVector& u, unsigned pu, std::size_t w) {
            SparseVector out = action.act(action.act(v, u), w);
            add_scaled(out, action.act(action.act(v, w), u), -sign_scalar(pu & par[w]));
            return out;
          };
          for (std::size_t i = 0; i < m; ++i) {
            sink.count_case();
            const SparseVector v = unit_vector(i);
            SparseVector r = supercommutator(v, xy, px ^ py, z);
            add_scaled(r, supercommutator(v, xz, px ^ pz, y), sign_scalar(py & pz));
            add_scaled(r, supercommutator(v, yz, py ^ pz, x), sign_scalar(px & (py ^ pz)));
            if (!r.empty()) record(sink, "operator-commutator", x, y, z, i, r);
          }
        }
      }
    }
  });
  const double millis = report.millis + commutator.millis;
  report.absorb(std::move(commutator), options.limit);
  report.millis = millis;
  return report;
}

}  // namespace kanrep
