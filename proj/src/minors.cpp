#include "ladder/minors.hpp"

#include <algorithm>
#include <map>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

/*
 * Shared-memo determinant expansion. The subproblem for a column set S is
 * the determinant of the submatrix on rows [1, |S|] and columns S, expanded
 * along its last row; the ladder zero pattern prunes branches and the memo is
 * shared across all minors of one shape, where subsets repeat heavily.
 */
class MinorCalculator {
 public:
  explicit MinorCalculator(const LadderShape& shape) : shape_(&shape) {}

  const Polynomial& det(const ColumnTuple& cols) {
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    Polynomial result;
    const int t = static_cast<int>(cols.size());
    if (t == 0) {
      result = Polynomial::constant(1);
    } else {
      for (int p = 0; p < t; ++p) {
        const int col = cols[p];
        if (col < shape_->u(t) || col > shape_->v(t)) continue;  // zero entry
        ColumnTuple sub;
        sub.reserve(t - 1);
        for (int q = 0; q < t; ++q)
          if (q != p) sub.push_back(cols[q]);
        const BigInt sign = ((t + p + 1) % 2 == 0) ? 1 : -1;
        result += Polynomial::term(Monomial::variable({t, col}), sign) * det(sub);
      }
    }
    return memo_.emplace(cols, std::move(result)).first->second;
  }

 private:
  const LadderShape* shape_;
  std::map<ColumnTuple, Polynomial> memo_;
};

void require_tuple(const LadderShape& shape, const ColumnTuple& c) {
  if (!tuple_in_lattice(shape, c)) {
    std::string cols;
    for (int x : c) cols += std::to_string(x) + " ";
    throw std::invalid_argument("column tuple " + cols + "is not in the lattice of " +
                                shape.to_text());
  }
}

}  // namespace

Polynomial minor_det(const LadderShape& shape, const ColumnTuple& c, const Caps& caps) {
  require_tuple(shape, c);
  if (shape.rows() > caps.max_det_rows)
    throw CapExceeded("determinant bound is " + std::to_string(caps.max_det_rows) +
                      " rows, shape has " + std::to_string(shape.rows()));
  MinorCalculator calc(shape);
  Polynomial result = calc.det(c);
  detail::check(!result.is_zero(), "maximal minors of a ladder are nonzero");
  return result;
}

Monomial diagonal_monomial(const ColumnTuple& c) {
  Monomial m;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    m = m * Monomial::variable({i + 1, c[i]});
  return m;
}

DiagonalCheck diagonal_leading_check(const LadderShape& shape, const Caps& caps) {
  require_normalized(shape);
  if (shape.rows() > caps.max_det_rows)
    throw CapExceeded("determinant bound is " + std::to_string(caps.max_det_rows) +
                      " rows, shape has " + std::to_string(shape.rows()));
  MinorCalculator calc(shape);
  for (const ColumnTuple& c : enumerate_lattice(shape, caps.max_lattice)) {
    auto [mono, coeff] = calc.det(c).leading_term();
    if (!(mono == diagonal_monomial(c)) || coeff != 1) return {false, c};
  }
  return {true, std::nullopt};
}

long long bareiss_rank(std::vector<std::vector<BigInt>>& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t nrows = matrix.size(), ncols = matrix[0].size();
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t pivot = row;
    while (pivot < nrows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    matrix[row].swap(matrix[pivot]);
    for (std::size_t i = row + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        matrix[i][j] = (matrix[row][col] * matrix[i][j] - matrix[i][col] * matrix[row][j]) / prev;
      matrix[i][col] = 0;
    }
    prev = matrix[row][col];
    ++row;
  }
  return static_cast<long long>(row);
}

long long fiber_hilbert_direct(const LadderShape& shape, int r, int d, const Caps& caps) {
  require_normalized(shape);
  if (r < 1) throw std::invalid_argument("copy count r must be >= 1");
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  if (d == 0) return 1;
  if (shape.rows() > caps.max_det_rows)
    throw CapExceeded("determinant bound is " + std::to_string(caps.max_det_rows) +
                      " rows, shape has " + std::to_string(shape.rows()));

  const std::vector<ColumnTuple> tuples = enumerate_lattice(shape, caps.max_lattice);
  const long long gens = static_cast<long long>(tuples.size()) * r;
  BigInt products = 1;  // C(gens + d - 1, d)
  for (int k = 1; k <= d; ++k) products = products * (gens + d - k) / k;
  if (products > caps.direct_budget)
    throw CapExceeded("degree-" + std::to_string(d) + " has " + products.str() +
                          " generator products, budget is " + std::to_string(caps.direct_budget),
                      products);

  MinorCalculator calc(shape);
  std::vector<const Polynomial*> dets;
  dets.reserve(tuples.size());
  for (const ColumnTuple& c : tuples) dets.push_back(&calc.det(c));

  // a generator is (tuple index, copy); a degree-d product is a multiset of
  // them; the row of the product is its coefficient vector over pairs
  // (x-monomial, sorted copy multiset)
  using RowKey = std::pair<std::vector<int>, Monomial>;
  struct RowKeyLess {
    bool operator()(const RowKey& a, const RowKey& b) const {
      if (a.first != b.first) return a.first < b.first;
      return tau_compare(a.second, b.second) > 0;
    }
  };
  std::vector<std::map<RowKey, BigInt, RowKeyLess>> rows;
  std::vector<std::pair<std::size_t, int>> multiset;
  auto emit = [&]() {
    Polynomial prod = Polynomial::constant(1);
    std::vector<int> copies;
    for (auto [ti, k] : multiset) {
      prod = prod * *dets[ti];
      copies.push_back(k);
    }
    std::sort(copies.begin(), copies.end());
    std::map<RowKey, BigInt, RowKeyLess> row;
    for (const auto& [m, c] : prod.terms()) row[{copies, m}] = c;
    rows.push_back(std::move(row));
  };
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      emit();
      return;
    }
    for (std::size_t g = from; g < static_cast<std::size_t>(gens); ++g) {
      multiset.push_back({g / r, static_cast<int>(g % r) + 1});
      self(self, g, left - 1);
      multiset.pop_back();
    }
  };
  rec(rec, 0, d);

  std::map<RowKey, std::size_t, RowKeyLess> columns;
  for (const auto& row : rows)
    for (const auto& [key, c] : row) columns.try_emplace(key, columns.size());
  std::vector<std::vector<BigInt>> matrix(rows.size(), std::vector<BigInt>(columns.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, c] : rows[i]) matrix[i][columns[key]] = c;
  return bareiss_rank(matrix);
}

}  // namespace ladder
