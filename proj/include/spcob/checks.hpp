#pragma once

#include <vector>

#include "spcob/check.hpp"
#include "spcob/report.hpp"

namespace spcob {

struct SuiteLimits {
  int max_r = 3;
  int max_n = 6;
  int max_deg = 8;
};

// Finite verifications shared by the CLI verbs and `suite all`.

/// e-determinant, h-determinant and alternant agree in the x-basis for
/// l(lambda) <= r <= max_r, |lambda| <= max_deg.
CheckOutcome check_jacobi_trudi(int max_r, int max_deg);

/// h_m via the recurrence matches the monomial sum.
CheckOutcome check_h_recurrence(int max_r, int max_deg);

/// rank(GrassRing(r, n)) = C(n, r) for 1 <= r <= n <= max_n.
CheckOutcome check_grass_ranks(int max_n);

/// GrassRing(1, n+1) multiplies like Z[zeta]/(zeta^{n+1}) for n <= max_n.
CheckOutcome check_hp_ring(int max_n);

/// Schur classes outside the box vanish and the box classes are a basis,
/// r <= max_r, r <= n <= max_n, |lambda| <= r(n-r)+2.
CheckOutcome check_prop1(int max_r, int max_n);

/// Multiplication by e_r from the (r, n-1) ring is s_mu -> s_{mu + 1^r}.
CheckOutcome check_prop2(int max_r, int max_n);

/// 0 -> (r,n-1) -> (r,n) -> (r-1,n-1) -> 0 exact, with ranks adding.
CheckOutcome check_exact_sequence(int max_r, int max_n);

/// alpha and beta are surjective ring maps on each graded piece.
CheckOutcome check_stabilization_maps(int max_r, int max_n);

/// Cartan formula over all splits of up to max_roots roots; trivial bundles
/// have zero classes.
CheckOutcome check_cartan(int max_roots);

/// Perp-bundle identities for root bundles with 1..max_roots roots.
CheckOutcome check_perp(int max_roots);

/// p_1, p_2 and p_{r+s} images for r, s <= max_rs.
CheckOutcome check_coproduct_formulas(int max_rs, int trunc);

/// Printed M(t) and, if it fails, the elementary-factor fallback.
CheckOutcome check_paper_matrix();

std::vector<Report> run_suite(const SuiteLimits& limits);

}  // namespace spcob
