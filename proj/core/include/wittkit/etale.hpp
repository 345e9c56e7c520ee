#pragma once

#include <utility>
#include <vector>

#include "wittkit/metric_group.hpp"

namespace wittkit {

/// Decomposition of an isotropic subgroup H of (A1 x A2, q1 + q2):
/// H1 = H n (A1 x 0), H2 = H n (0 x A2), and the image of H in
/// (H1^perp/H1) x (H2^perp/H2) is the graph of an anti-isometry
/// phi: B1 -> B2 between subgroups of the two condensed factors.
struct EtaleDatum {
  Subgroup h1;
  Subgroup h2;
  PreMetricGroup condensed1;
  PreMetricGroup condensed2;
  Subgroup b1;
  Subgroup b2;
  /// Graph of phi as (x, phi(x)), sorted by x.
  std::vector<std::pair<Element, Element>> phi;
};

struct EtaleAlgebra {
  /// Isotropic subgroup of the product.
  Subgroup algebra;
  EtaleDatum datum;
};

/// Every connected etale algebra of C(A1,q1) boxtimes C(A2,q2), i.e. every
/// isotropic subgroup of the orthogonal product, with its decomposition.
/// Requires |A1| |A2| <= 4096. Throws TheoremViolation if some subgroup does
/// not decompose.
std::vector<EtaleAlgebra> enumerate_etale(const PreMetricGroup& c1, const PreMetricGroup& c2);

/// |H| == |H1| |H2| |B1|.
bool check_prdim(const EtaleAlgebra& algebra);

/// Isotropic subgroups of c containing h correspond bijectively, via
/// K -> K / h, to isotropic subgroups of condense(c, h).
bool check_et0(const PreMetricGroup& c, const Subgroup& h);

}  // namespace wittkit
