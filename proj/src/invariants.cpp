#include "ladder/invariants.hpp"

#include "ladder/errors.hpp"
#include "ladder/poset.hpp"

namespace ladder {

InvariantReport invariants(const LadderShape& shape, int r, const Caps& caps) {
  require_normalized(shape);
  FinitePoset poset(shape, r);
  const GapProfile g = gaps(shape);

  InvariantReport rep;
  rep.p_size = static_cast<long long>(poset.size());
  rep.rank = purity(poset, caps.max_chains).rank;
  rep.reg = rep.p_size - rep.rank - 1;
  rep.reduction_number = rep.reg;
  rep.dim = rep.p_size + 1;
  detail::check(rep.dim == g.delta_sum() + r, "dim = sum of deltas + r");
  rep.a_invariant = rep.reg - rep.dim;
  rep.gorenstein = is_gorenstein_M(shape, r).verdict;

  if (rep.gorenstein) {
    ClosedForms cf;
    if (r >= 2) {
      cf.reg = g.delta_sum();
      cf.a_invariant = -r;
    } else {
      const int i_min = blocks(shape).blocks.front().i_min;
      cf.reg = g.delta_sum() - g.delta.front() - i_min + 1;
      cf.a_invariant = -g.delta.front() - i_min;
    }
    detail::check(cf.reg == rep.reg, "closed-form regularity matches |P| - rank - 1");
    detail::check(cf.a_invariant == rep.a_invariant, "closed-form a-invariant matches reg - dim");
    rep.closed_forms = cf;
  }
  return rep;
}

long long fiber_dimension(const LadderShape& shape, int r) {
  require_normalized(shape);
  if (r < 1) throw std::invalid_argument("copy count r must be >= 1");
  const long long dim = gaps(shape).delta_sum() + r;
  detail::check(dim == static_cast<long long>(FinitePoset(shape, r).size()) + 1,
                "dimension equals |P| + 1");
  return dim;
}

}  // namespace ladder
