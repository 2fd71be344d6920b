#include "ladder/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "ladder/errors.hpp"

namespace ladder {

bool tuple_in_lattice(const LadderShape& shape, const ColumnTuple& c) {
  if (static_cast<int>(c.size()) != shape.rows()) return false;
  for (int i = 1; i <= shape.rows(); ++i) {
    if (c[i - 1] < shape.u(i) || c[i - 1] > shape.v(i)) return false;
    if (i > 1 && c[i - 2] >= c[i - 1]) return false;
  }
  return true;
}

std::string FiberPoint::to_text() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ',';
    out << tuple[i];
  }
  out << ';' << copy << ')';
  return out.str();
}

static void require_same_frame(const FiberPoint& a, const FiberPoint& b) {
  if (a.tuple.size() != b.tuple.size())
    throw std::invalid_argument("fiber points come from different shapes");
}

bool fiber_leq(const FiberPoint& a, const FiberPoint& b) {
  require_same_frame(a, b);
  for (std::size_t i = 0; i < a.tuple.size(); ++i)
    if (a.tuple[i] > b.tuple[i]) return false;
  return a.copy <= b.copy;
}

FiberPoint fiber_meet(const FiberPoint& a, const FiberPoint& b) {
  require_same_frame(a, b);
  FiberPoint out;
  out.tuple.reserve(a.tuple.size());
  for (std::size_t i = 0; i < a.tuple.size(); ++i)
    out.tuple.push_back(std::min(a.tuple[i], b.tuple[i]));
  out.copy = std::min(a.copy, b.copy);
  return out;
}

FiberPoint fiber_join(const FiberPoint& a, const FiberPoint& b) {
  require_same_frame(a, b);
  FiberPoint out;
  out.tuple.reserve(a.tuple.size());
  for (std::size_t i = 0; i < a.tuple.size(); ++i)
    out.tuple.push_back(std::max(a.tuple[i], b.tuple[i]));
  out.copy = std::max(a.copy, b.copy);
  return out;
}

BigInt count_lattice(const LadderShape& shape) {
  require_normalized(shape);
  const int n = shape.rows(), m = shape.cols();
  // f[c] = number of admissible prefixes ending at column c in the current row
  std::vector<BigInt> f(m + 1, 0);
  for (int c = shape.u(1); c <= shape.v(1); ++c) f[c] = 1;
  for (int i = 2; i <= n; ++i) {
    std::vector<BigInt> g(m + 1, 0);
    BigInt below = 0;  // sum of f over columns < c
    int prev = 0;
    for (int c = shape.u(i); c <= shape.v(i); ++c) {
      while (prev < c) below += f[prev++];
      g[c] = below;
    }
    f = std::move(g);
  }
  BigInt total = 0;
  for (int c = 1; c <= m; ++c) total += f[c];
  return total;
}

std::vector<ColumnTuple> enumerate_lattice(const LadderShape& shape, std::size_t cap) {
  require_normalized(shape);
  BigInt count = count_lattice(shape);
  if (count > cap)
    throw CapExceeded("lattice has " + count.str() + " elements, cap is " +
                          std::to_string(cap),
                      count);
  const int n = shape.rows();
  std::vector<ColumnTuple> out;
  out.reserve(static_cast<std::size_t>(count));
  ColumnTuple c(n);
  // odometer in lexicographic order
  int i = 0;
  c[0] = shape.u(1);
  while (i >= 0) {
    if (i == n - 1) {
      for (int last = c[n - 1]; last <= shape.v(n); ++last) {
        c[n - 1] = last;
        out.push_back(c);
      }
      --i;
      if (i >= 0) ++c[i];
    } else if (c[i] > shape.v(i + 1)) {
      --i;
      if (i >= 0) ++c[i];
    } else {
      c[i + 1] = std::max(shape.u(i + 2), c[i] + 1);
      ++i;
    }
  }
  detail::check(out.size() == count, "enumeration size equals the DP count");
  return out;
}

FiberLattice::FiberLattice(const LadderShape& shape, int r, const Caps& caps)
    : shape_(shape), r_(r) {
  if (r < 1) throw std::invalid_argument("copy count r must be >= 1");
  BigInt fiber_count = count_lattice(shape) * r;
  if (fiber_count > caps.max_lattice)
    throw CapExceeded("fiber lattice has " + fiber_count.str() + " elements, cap is " +
                          std::to_string(caps.max_lattice),
                      fiber_count);
  std::vector<ColumnTuple> tuples = enumerate_lattice(shape, caps.max_lattice);
  points_.reserve(tuples.size() * r);
  for (const ColumnTuple& t : tuples)
    for (int k = 1; k <= r; ++k) points_.push_back({t, k});

  if (points_.size() <= caps.max_bitmatrix) {
    const std::size_t sz = points_.size();
    words_ = (sz + 63) / 64;
    below_.assign(sz * words_, 0);
    for (std::size_t x = 0; x < sz; ++x) {
      std::uint64_t* row = below_.data() + x * words_;
      for (std::size_t y = 0; y <= x; ++y)
        if (fiber_leq(points_[y], points_[x])) row[y / 64] |= std::uint64_t{1} << (y % 64);
    }
  }
}

bool FiberLattice::leq(std::size_t a, std::size_t b) const {
  if (has_bitmatrix()) {
    if (a > b) return false;  // index order is a linear extension
    return (below_row(b)[a / 64] >> (a % 64)) & 1;
  }
  return fiber_leq(points_[a], points_[b]);
}

std::optional<std::size_t> FiberLattice::index_of(const FiberPoint& p) const {
  auto less = [](const FiberPoint& x, const FiberPoint& y) {
    if (x.tuple != y.tuple) return x.tuple < y.tuple;
    return x.copy < y.copy;
  };
  auto it = std::lower_bound(points_.begin(), points_.end(), p, less);
  if (it == points_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::string HibiRelation::to_text() const {
  return "T[" + a.to_text() + "]·T[" + b.to_text() + "] = T[" + meet.to_text() +
         "]·T[" + join.to_text() + "]";
}

std::vector<HibiRelation> hibi_relations(const LadderShape& shape, int r, const Caps& caps) {
  FiberLattice lat(shape, r, caps);
  std::vector<HibiRelation> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      if (lat.leq(i, j) || lat.leq(j, i)) continue;
      HibiRelation rel{lat.at(i), lat.at(j), fiber_meet(lat.at(i), lat.at(j)),
                       fiber_join(lat.at(i), lat.at(j))};
      detail::check(lat.index_of(rel.meet).has_value() && lat.index_of(rel.join).has_value(),
                    "meet/join closure");
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<BigInt> multichain_hilbert(const LadderShape& shape, int r, int dmax,
                                       const Caps& caps) {
  if (dmax < 0) throw std::invalid_argument("dmax must be >= 0");
  FiberLattice lat(shape, r, caps);
  const std::size_t sz = lat.size();
  std::vector<BigInt> hf;
  hf.reserve(dmax + 1);
  hf.push_back(1);
  std::vector<BigInt> count(sz, 1);  // multichains of length d ending at x
  for (int d = 1; d <= dmax; ++d) {
    BigInt total = 0;
    for (const BigInt& c : count) total += c;
    hf.push_back(std::move(total));
    if (d == dmax) break;
    std::vector<BigInt> next(sz, 0);
    for (std::size_t x = 0; x < sz; ++x) {
      BigInt acc = 0;
      lat.for_each_below(x, [&](std::size_t y) { acc += count[y]; });
      next[x] = std::move(acc);
    }
    count = std::move(next);
  }
  return hf;
}

bool HVector::symmetric() const {
  return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

std::string HVector::to_text() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out << ", ";
    out << coeffs[i];
  }
  out << ')';
  return out.str();
}

HVector h_vector(const LadderShape& shape, int r, const Caps& caps) {
  require_normalized(shape);
  const GapProfile g = gaps(shape);
  const long long p_size = g.delta_sum() + r - 1;
  const long long dim = p_size + 1;
  const int bound = static_cast<int>(p_size) + 2;

  std::vector<BigInt> hf = multichain_hilbert(shape, r, bound, caps);

  // binomials C(dim, 0..bound) for the (1-t)^dim difference operator
  std::vector<BigInt> binom(bound + 1, 0);
  binom[0] = 1;
  for (int k = 1; k <= bound; ++k) binom[k] = binom[k - 1] * (dim - k + 1) / k;

  std::vector<BigInt> h(bound + 1, 0);
  for (int j = 0; j <= bound; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= j; ++i) {
      BigInt term = binom[j - i] * hf[i];
      if ((j - i) % 2) acc -= term;
      else acc += term;
    }
    h[j] = std::move(acc);
  }
  // the numerator has degree below |P|, so the last entries must vanish
  if (h[bound] != 0 || h[bound - 1] != 0)
    throw std::logic_error("h-vector differencing did not stabilize within |P|+2");
  while (!h.empty() && h.back() == 0) h.pop_back();
  detail::check(!h.empty() && h.front() == 1, "h_0 = 1");
  for (const BigInt& c : h)
    detail::check(c >= 0, "h-vector of a Cohen-Macaulay ring is nonnegative");

  HVector out;
  out.coeffs = std::move(h);
  out.dim = dim;
  return out;
}

}  // namespace ladder
