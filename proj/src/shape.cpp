#include "ladder/shape.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ladder/errors.hpp"

namespace ladder {

LadderShape::LadderShape(std::vector<Interval> rows) : rows_(std::move(rows)) {
  for (const Interval& iv : rows_) m_ = std::max(m_, iv.hi);
}

std::string LadderShape::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out << ',';
    out << rows_[i].lo << '-' << rows_[i].hi;
  }
  return out.str();
}

LadderShape parse_shape(const std::string& text) {
  std::string stripped;
  stripped.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
  if (stripped.empty()) throw std::invalid_argument("shape: empty interval list");

  std::vector<Interval> rows;
  std::stringstream ss(stripped);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto dash = token.find('-', 1);  // position 0 would be a sign, not a separator
    if (token.empty() || dash == std::string::npos)
      throw std::invalid_argument("shape: malformed token '" + token + "', expected 'a-b'");
    int lo = 0, hi = 0;
    try {
      std::string a = token.substr(0, dash), b = token.substr(dash + 1);
      std::size_t pa = 0, pb = 0;
      lo = std::stoi(a, &pa);
      hi = std::stoi(b, &pb);
      if (pa != a.size() || pb != b.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("shape: malformed token '" + token + "'");
    }
    if (lo < 1 || hi < 1)
      throw std::invalid_argument("shape: column indices are 1-based, got '" + token + "'");
    if (lo > hi)
      throw std::invalid_argument("shape: reversed interval '" + token + "'");
    rows.push_back({lo, hi});
  }
  if (stripped.back() == ',' || rows.empty())
    throw std::invalid_argument("shape: malformed interval list");
  return LadderShape(std::move(rows));
}

ValidationReport validate(const LadderShape& shape) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };
  const int n = shape.rows();
  const int m = shape.cols();
  if (n == 0) {
    fail("no rows");
    return rep;
  }
  if (shape.u(1) != 1) fail("u[1] = " + std::to_string(shape.u(1)) + ", expected 1");
  if (shape.v(1) <= 1) fail("v[1] = " + std::to_string(shape.v(1)) + ", expected > 1");
  if (shape.v(n) != m) fail("v[n] = " + std::to_string(shape.v(n)) + ", expected m = " + std::to_string(m));
  if (shape.u(n) >= m) fail("u[n] = " + std::to_string(shape.u(n)) + ", expected < m = " + std::to_string(m));
  for (int i = 2; i <= n; ++i) {
    if (shape.u(i) == shape.u(i - 1))
      fail("u[" + std::to_string(i) + "] = u[" + std::to_string(i - 1) + "] (duplicate start)");
    else if (shape.u(i) < shape.u(i - 1))
      fail("u[" + std::to_string(i) + "] < u[" + std::to_string(i - 1) + "] (decreasing starts)");
    if (shape.v(i) == shape.v(i - 1))
      fail("v[" + std::to_string(i) + "] = v[" + std::to_string(i - 1) + "] (duplicate end)");
    else if (shape.v(i) < shape.v(i - 1))
      fail("v[" + std::to_string(i) + "] < v[" + std::to_string(i - 1) + "] (decreasing ends)");
    if (shape.u(i) > shape.v(i - 1) + 1)
      fail("u[" + std::to_string(i) + "] > v[" + std::to_string(i - 1) + "] + 1 (all-zero columns)");
  }
  for (int i = 1; i <= n; ++i)
    if (shape.u(i) >= shape.v(i))
      fail("u[" + std::to_string(i) + "] = v[" + std::to_string(i) + "] (degenerate row)");
  if (n >= m) fail("n >= m (square case reduces to a polynomial ring)");
  return rep;
}

bool is_normalized(const LadderShape& shape) { return validate(shape).ok(); }

void require_normalized(const LadderShape& shape) {
  ValidationReport rep = validate(shape);
  if (rep.ok()) return;
  std::string msg = "shape '" + shape.to_text() + "' is not normalized:";
  for (const std::string& viol : rep.violations) msg += " " + viol + ";";
  throw std::invalid_argument(msg);
}

int Gap::value() const {
  if (unbounded_) throw std::logic_error("Gap: unbounded sentinel has no value");
  return value_;
}

std::string Gap::to_text() const { return unbounded_ ? "inf" : std::to_string(value_); }

long long GapProfile::delta_sum() const {
  return std::accumulate(delta.begin(), delta.end(), 0LL);
}

GapProfile gaps(const LadderShape& shape) {
  require_normalized(shape);
  const int n = shape.rows();
  GapProfile g;
  g.delta.reserve(n);
  for (int i = 1; i <= n; ++i) g.delta.push_back(shape.v(i) - shape.u(i));
  for (int j = 1; j < n; ++j) g.eps.push_back(Gap::finite(shape.u(j + 1) - shape.u(j)));
  g.eps.push_back(Gap::unbounded());  // eps_n
  g.theta.push_back(Gap::unbounded());  // theta_0
  for (int j = 1; j < n; ++j) g.theta.push_back(Gap::finite(shape.v(j + 1) - shape.v(j)));
  return g;
}

BlockDecomposition blocks(const LadderShape& shape) {
  require_normalized(shape);
  const int n = shape.rows();
  const GapProfile g = gaps(shape);
  BlockDecomposition dec;
  for (int i = 1; i < n; ++i)
    if (shape.v(i) < shape.u(i + 1)) dec.cuts.push_back(i);
  dec.cuts.push_back(n);

  int p = 1;
  for (int q : dec.cuts) {
    if (q < n) {
      // a cut forces u_{q+1} = v_q + 1, so the adjacent gaps both exceed 1
      detail::check(g.epsilon_at(q).greater_than(1), "eps at block cut must exceed 1");
      detail::check(g.theta_at(q).greater_than(1), "theta at block cut must exceed 1");
    }
    int i_min = 0;
    for (int i = p; i <= q; ++i)
      if (g.epsilon_at(i).greater_than(1)) {
        i_min = i;
        break;
      }
    detail::check(i_min >= p && i_min <= q, "every block has a row with eps > 1");
    dec.blocks.push_back({p, q, i_min});
    p = q + 1;
  }
  return dec;
}

std::string NormalizationStep::to_text() const {
  switch (kind) {
    case Kind::BumpedDuplicateU:
      return "bumped duplicate start in row " + std::to_string(row);
    case Kind::ShrunkDuplicateV:
      return "shrunk duplicate end in row " + std::to_string(row);
    case Kind::RemovedZeroColumns:
      return "removed all-zero columns " + std::to_string(lo) + "-" + std::to_string(hi);
    case Kind::DroppedDegenerateRow:
      return "dropped single-column row " + std::to_string(row);
    case Kind::ReducedSquareCase:
      return "reduced away: fiber is a polynomial ring";
  }
  return "?";
}

bool NormalizeResult::reduced_away() const {
  return !trace.empty() && trace.back().kind == NormalizationStep::Kind::ReducedSquareCase;
}

namespace {

// One round of the reduction steps, in their fixed order. Returns true if
// anything changed.
bool reduce_once(std::vector<Interval>& rows, NormalizationTrace& trace) {
  const int n = static_cast<int>(rows.size());
  bool changed = false;

  // (1) duplicate starts, top-down
  for (int i = 2; i <= n; ++i) {
    if (rows[i - 1].lo <= rows[i - 2].lo) {
      int fixed = rows[i - 2].lo + 1;
      if (fixed > rows[i - 1].hi)
        throw std::invalid_argument("unnormalizable: row " + std::to_string(i) + " empties out");
      rows[i - 1].lo = fixed;
      trace.push_back({NormalizationStep::Kind::BumpedDuplicateU, i, 0, 0});
      changed = true;
    }
  }
  // (2) duplicate ends, bottom-up
  for (int i = n - 1; i >= 1; --i) {
    if (rows[i - 1].hi >= rows[i].hi) {
      int fixed = rows[i].hi - 1;
      if (fixed < rows[i - 1].lo)
        throw std::invalid_argument("unnormalizable: row " + std::to_string(i) + " empties out");
      rows[i - 1].hi = fixed;
      trace.push_back({NormalizationStep::Kind::ShrunkDuplicateV, i, 0, 0});
      changed = true;
    }
  }
  // (3) all-zero columns: ranges not covered by any interval, removed and
  // the later columns relabeled downwards
  {
    int m = 0;
    for (const Interval& iv : rows) m = std::max(m, iv.hi);
    std::vector<char> covered(m + 1, 0);
    for (const Interval& iv : rows)
      for (int c = iv.lo; c <= iv.hi; ++c) covered[c] = 1;
    std::vector<std::pair<int, int>> zero_ranges;
    for (int c = 1; c <= m; ++c) {
      if (covered[c]) continue;
      int lo = c;
      while (c + 1 <= m && !covered[c + 1]) ++c;
      zero_ranges.push_back({lo, c});
    }
    if (!zero_ranges.empty()) {
      std::vector<int> shift(m + 1, 0);
      int removed = 0;
      for (int c = 1; c <= m; ++c) {
        if (!covered[c]) ++removed;
        shift[c] = removed;
      }
      // each range is recorded in the labels left by the removals before it,
      // so the trace replays one step at a time
      int acc = 0;
      for (auto [lo, hi] : zero_ranges) {
        trace.push_back({NormalizationStep::Kind::RemovedZeroColumns, 0, lo - acc, hi - acc});
        acc += hi - lo + 1;
      }
      for (Interval& iv : rows) {
        iv.lo -= shift[iv.lo];
        iv.hi -= shift[iv.hi];
      }
      changed = true;
    }
  }
  // (4) degenerate rows u_i = v_i factor out of every generator
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    if (rows[i - 1].lo == rows[i - 1].hi) {
      trace.push_back({NormalizationStep::Kind::DroppedDegenerateRow, i, 0, 0});
      rows.erase(rows.begin() + (i - 1));
      changed = true;
      break;  // restart the whole cycle with fresh row labels
    }
  }
  return changed;
}

}  // namespace

NormalizeResult normalize(const LadderShape& raw) {
  if (raw.empty()) throw std::invalid_argument("normalize: empty shape");
  for (int i = 1; i <= raw.rows(); ++i)
    if (raw.u(i) > raw.v(i)) throw std::invalid_argument("normalize: reversed interval in row " + std::to_string(i));
  for (int i = 2; i <= raw.rows(); ++i) {
    if (raw.u(i) < raw.u(i - 1) || raw.v(i) < raw.v(i - 1))
      throw std::invalid_argument("unnormalizable: intervals must be sorted (row " + std::to_string(i) + ")");
  }

  std::vector<Interval> rows = raw.intervals();
  NormalizationTrace trace;
  while (!rows.empty() && reduce_once(rows, trace)) {
  }

  NormalizeResult result;
  result.shape = LadderShape(rows);
  result.trace = std::move(trace);
  if (rows.empty() || result.shape.rows() == result.shape.cols()) {
    result.trace.push_back({NormalizationStep::Kind::ReducedSquareCase, 0, 0, 0});
    return result;
  }
  require_normalized(result.shape);
  return result;
}

LadderShape replay_trace(const LadderShape& raw, const NormalizationTrace& trace) {
  std::vector<Interval> rows = raw.intervals();
  for (const NormalizationStep& step : trace) {
    using K = NormalizationStep::Kind;
    switch (step.kind) {
      case K::BumpedDuplicateU:
        rows.at(step.row - 1).lo = rows.at(step.row - 2).lo + 1;
        break;
      case K::ShrunkDuplicateV:
        rows.at(step.row - 1).hi = rows.at(step.row).hi - 1;
        break;
      case K::RemovedZeroColumns: {
        int width = step.hi - step.lo + 1;
        for (Interval& iv : rows) {
          if (iv.lo > step.hi) iv.lo -= width;
          if (iv.hi > step.hi) iv.hi -= width;
        }
        break;
      }
      case K::DroppedDegenerateRow:
        rows.erase(rows.begin() + (step.row - 1));
        break;
      case K::ReducedSquareCase:
        break;
    }
  }
  return LadderShape(rows);
}

}  // namespace ladder
