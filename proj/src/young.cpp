#include "conjrep/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "conjrep/util.hpp"

namespace conjrep {

namespace {

void partitions_rec(std::uint32_t remaining, std::uint32_t max_part,
                    std::vector<std::uint32_t>& current,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

// A standard tableau stored as the (row, col) of each value 1..k (index 0
// holds value 1).
struct Tableau {
  std::vector<std::uint32_t> row;
  std::vector<std::uint32_t> col;

  bool operator<(const Tableau& o) const {
    return std::tie(row, col) < std::tie(o.row, o.col);
  }
  bool operator==(const Tableau& o) const {
    return row == o.row && col == o.col;
  }
};

void tableaux_rec(const std::vector<std::uint32_t>& shape, std::uint32_t value,
                  std::uint32_t k, std::vector<std::uint32_t>& fill,
                  Tableau& partial, std::vector<Tableau>& out) {
  if (value == k) {
    out.push_back(partial);
    return;
  }
  for (std::uint32_t r = 0; r < shape.size(); ++r) {
    const std::uint32_t c = fill[r];
    if (c >= shape[r]) continue;
    if (r > 0 && fill[r - 1] <= c) continue;  // cell above must be filled
    fill[r] = c + 1;
    partial.row[value] = r;
    partial.col[value] = c;
    tableaux_rec(shape, value + 1, k, fill, partial, out);
    fill[r] = c;
  }
}

std::vector<Tableau> standard_tableaux(const std::vector<std::uint32_t>& shape,
                                       std::uint32_t k) {
  std::vector<Tableau> out;
  std::vector<std::uint32_t> fill(shape.size(), 0);
  Tableau partial{std::vector<std::uint32_t>(k), std::vector<std::uint32_t>(k)};
  tableaux_rec(shape, 0, k, fill, partial, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Signed axial distance from value v to value v+1 (0-based v).
std::int64_t axial_distance(const Tableau& t, std::uint32_t v) {
  const auto content = [&](std::uint32_t value) {
    return static_cast<std::int64_t>(t.col[value]) -
           static_cast<std::int64_t>(t.row[value]);
  };
  return content(v + 1) - content(v);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  partitions_rec(k, k, current, out);
  return out;
}

std::uint64_t hook_length_degree(const std::vector<std::uint32_t>& partition) {
  std::uint32_t k = 0;
  for (std::uint32_t part : partition) k += part;
  std::vector<std::uint32_t> conjugate;
  for (std::uint32_t c = 0; c < (partition.empty() ? 0 : partition.front()); ++c) {
    std::uint32_t height = 0;
    for (std::uint32_t part : partition) height += (part > c);
    conjugate.push_back(height);
  }
  std::uint64_t hooks = 1;
  for (std::uint32_t r = 0; r < partition.size(); ++r) {
    for (std::uint32_t c = 0; c < partition[r]; ++c) {
      hooks *= (partition[r] - c) + (conjugate[c] - r) - 1;
    }
  }
  return factorial(k) / hooks;
}

std::vector<SeminormalIrrep> seminormal_irreps(std::uint32_t k) {
  if (k == 0 || k > kMaxSymmetricDegree) {
    throw InputError("seminormal construction supports symmetric groups on 1 to " +
                     std::to_string(kMaxSymmetricDegree) + " points");
  }
  const RationalField field;
  std::vector<SeminormalIrrep> irreps;
  for (const auto& shape : partitions_of(k)) {
    const auto tableaux = standard_tableaux(shape, k);
    std::map<Tableau, std::uint32_t> index;
    for (std::uint32_t i = 0; i < tableaux.size(); ++i) index.emplace(tableaux[i], i);

    SeminormalIrrep irrep;
    irrep.partition = shape;
    irrep.degree = static_cast<std::uint32_t>(tableaux.size());
    std::ostringstream label;
    label << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) label << ",";
      label << shape[i];
    }
    label << "]";
    irrep.label = label.str();

    for (std::uint32_t v = 0; v + 1 < k; ++v) {
      Matrix<RationalField> m(field, irrep.degree, irrep.degree);
      for (std::uint32_t tau = 0; tau < tableaux.size(); ++tau) {
        const Tableau& t = tableaux[tau];
        const std::int64_t d = axial_distance(t, v);
        if (d == 1) {
          m.at(tau, tau) = field.one();  // same row, adjacent
        } else if (d == -1) {
          m.at(tau, tau) = field.from_int(-1);  // same column, adjacent
        } else {
          Tableau swapped = t;
          std::swap(swapped.row[v], swapped.row[v + 1]);
          std::swap(swapped.col[v], swapped.col[v + 1]);
          const std::uint32_t tau2 = index.at(swapped);
          const Rational inv_d = make_fraction(1, d);
          m.at(tau, tau) = inv_d;
          // Column tau carries 1 on the swapped tableau when d > 0, and
          // 1 - 1/d^2 when d < 0; the pair multiplies to an involution.
          if (d > 0) {
            m.at(tau2, tau) = field.one();
          } else {
            m.at(tau2, tau) = Rational(1) - inv_d * inv_d;
          }
        }
      }
      irrep.adjacent_images.push_back(std::move(m));
    }
    irreps.push_back(std::move(irrep));
  }
  return irreps;
}

Matrix<RationalField> seminormal_image(const SeminormalIrrep& irrep,
                                       const std::vector<std::uint32_t>& perm) {
  const RationalField field;
  const auto k = static_cast<std::uint32_t>(perm.size());
  // Bubble-sort the one-line notation; swapping positions j, j+1 composes
  // with the adjacent transposition on the right, so perm factors as the
  // reversed swap sequence.
  std::vector<std::uint32_t> word;
  std::vector<std::uint32_t> p = perm;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t j = 0; j + 1 < k; ++j) {
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        word.push_back(j);
        changed = true;
      }
    }
  }
  Matrix<RationalField> out = Matrix<RationalField>::identity(field, irrep.degree);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = out * irrep.adjacent_images[*it];
  }
  return out;
}

}  // namespace conjrep
