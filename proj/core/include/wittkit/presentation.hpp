#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/smith.hpp"

namespace wittkit {

/// Abelian group generated by the named generators subject to the relation
/// rows (written additively).
struct AbelianPresentation {
  std::vector<std::string> generator_names;
  IntMatrix relations;
};

struct GroupStructure {
  /// Torsion invariant factors, each > 1, in divisibility order.
  std::vector<std::int64_t> invariant_factors;
  std::size_t free_rank = 0;
  /// Right transform of the Smith form: a generator-coordinate row vector x
  /// has canonical coordinates x * coordinate_map.
  IntMatrix coordinate_map;
  /// Modulus of each canonical coordinate (0 for a free coordinate).
  std::vector<std::int64_t> moduli;
};

GroupStructure analyze(const AbelianPresentation& p);

/// Order of the image of the vector; nullopt for infinite order.
std::optional<std::int64_t> element_order(const AbelianPresentation& p, const std::vector<std::int64_t>& vector);
std::optional<std::int64_t> element_order(const GroupStructure& s, const std::vector<std::int64_t>& vector);

/// Generators x_1..x_K for the classes [C(sl(2),k)] and every relation among
/// the listed ones whose generators are all <= K:
///   8x1, 16x2, 4x4, 2x6 - 3x2, x10 - 7x2, x8 + 2x3 - 2x1, x28 - x3 + x1.
AbelianPresentation sl2_witt_presentation(int max_level);

/// Relation row printed multiplicatively, e.g. "x6^2 x2^-3 = 1".
std::string format_relation(const AbelianPresentation& p, std::size_t row);

/// Witt class of C(sl(2), 2l+1)_pt equals that of C(sl(2),1) to the power
/// (-1)^l, checked by anisotropic kernels.
bool pointed_part_consistency(int l);

}  // namespace wittkit
