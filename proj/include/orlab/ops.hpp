#pragma once

#include <optional>
#include <span>

#include "orlab/grid.hpp"
#include "orlab/intervals.hpp"
#include "orlab/young.hpp"

namespace orlab {

// Uncentered Hardy-Littlewood maximal function over all grid-aligned
// intervals, exact, O(n^2) total via prefix sums.
DiscreteFunction hl_maximal(const DiscreteFunction& f);

// Maximal averages weighted by u: sup over I containing i of
// (sum_I |f| u) / (sum_I u).
DiscreteFunction weighted_maximal(const DiscreteFunction& f, const Weight& u);

// Normalized Luxemburg average ||f||_{A,I}: the smallest lambda with
// (1/|I|) sum_{j in I} A(|f_j| / lambda) <= 1. Closed form for power kinds.
double luxemburg_average(std::span<const double> cells, const GrowthFunction& A);

// Orlicz maximal operator M_A f(x) = sup_{I ∋ x} ||f||_{A,I}. The default
// family enumerates every interval up to n = 256 and switches to dyadic +
// shifted grids above that (per-interval averages need a bisection, so the
// quadratic family becomes too costly well before the plain maximal does).
DiscreteFunction orlicz_maximal(const DiscreteFunction& f, const GrowthFunction& A);
DiscreteFunction orlicz_maximal(const DiscreteFunction& f, const GrowthFunction& A,
                                const IntervalFamily& family);

inline constexpr int kOrliczMaximalAllCutoff = 256;

// Principal-value Hilbert transform with the 1/(pi (x - y)) kernel
// integrated exactly against the piecewise-constant density; the own cell
// cancels symmetrically.
DiscreteFunction hilbert(const DiscreteFunction& f);

// [b, H] f = b * Hf - H(b f)
DiscreteFunction commutator(const DiscreteFunction& b, const DiscreteFunction& f);

// S f = M(f u) / u
DiscreteFunction sawyer(const DiscreteFunction& f, const Weight& u);

}  // namespace orlab
