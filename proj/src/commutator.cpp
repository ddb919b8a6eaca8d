#include "cuspgroup/abelian.hpp"
#include "cuspgroup/errors.hpp"
#include "cuspgroup/families.hpp"
#include "cuspgroup/rewriting.hpp"

namespace cusp {

std::size_t commutator_abelianization_rank(int n) {
  if (n < 3 || n % 2 == 0)
    throw InvalidParameter("commutator_abelianization_rank needs odd n >= 3 (cyclic abelianization)");
  const Presentation p = presentation_pi1_reduced(n);
  // every meridian maps to the generator of Z/2n
  AbelianTarget target({2L * n}, std::vector<AbelianTarget::Element>(p.generator_count(), {1}));
  SubgroupOptions options;
  options.generator_order = {1};
  const Presentation kernel = subgroup_presentation(p, target, {}, options);
  return abelianization(kernel).free_rank;
}

} // namespace cusp
