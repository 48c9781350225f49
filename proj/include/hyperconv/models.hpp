#ifndef HYPERCONV_MODELS_HPP
#define HYPERCONV_MODELS_HPP

#include <cstdint>
#include <vector>

#include "hyperconv/hypergroup.hpp"

namespace hyperconv {

/// Discrete Chebyshev-type hypergroup on N0:
/// delta_m * delta_n = 1/2 delta_{|m-n|} + 1/2 delta_{m+n}, identity 0,
/// involution id, haar(0)=1, haar(n)=2. `sample_limit` bounds the stored
/// point set used by sampling operations.
HypergroupPtr chebyshev_hypergroup(std::int64_t sample_limit = 64);

/// Finite double coset hypergroup G//K from a group multiplication table
/// (n x n, entries are element indices) and a subgroup given as an index
/// list. Throws BadDescriptor for non-groups/non-subgroups and
/// NonCommutative when G//K is not commutative.
HypergroupPtr finite_double_coset(const std::vector<std::vector<int>>& table,
                                  const std::vector<int>& subgroup);

/// Bessel-Kingman orbit hypergroup (R^3 under SO(3), radial part) on the
/// grid {0, h, ..., X_max}: kernel density z/(2xy) dz on [|x-y|, x+y],
/// haar ~ x^2 dx. Kernel weights are exact closed-form cell integrals; the
/// two endpoint partial cells are placed first-moment-exactly across the
/// adjacent in-support nodes.
HypergroupPtr bessel_kingman(double h = 1.0 / 64, double x_max = 16.0);

/// Hyperbolic hypergroup SL(2,C)//SU(2) on the same grid: kernel density
/// sinh z/(2 sinh x sinh y) dz on [|x-y|, x+y], haar ~ sinh^2 x dx.
HypergroupPtr hyperbolic(double h = 1.0 / 64, double x_max = 16.0);

}  // namespace hyperconv

#endif
