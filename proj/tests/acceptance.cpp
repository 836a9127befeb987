// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "spcob/checks.hpp"
#include "spcob/spmat.hpp"
#include "spcob/stable.hpp"

using namespace spcob;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<CheckOutcome()> run;
};

CheckOutcome all_of(std::initializer_list<std::function<CheckOutcome()>> parts) {
  CheckOutcome out;
  for (const auto& part : parts) out.absorb(part());
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Jacobi-Trudi determinants match the alternant, r <= 4, |lambda| <= 8",
       [] { return all_of({[] { return check_jacobi_trudi(4, 8); }, [] { return check_h_recurrence(4, 8); }}); }},
      {2, "rank HGr(r,n) = C(n,r) for n <= 8; HP^n = Z[zeta]/(zeta^{n+1}) for n <= 6",
       [] { return all_of({[] { return check_grass_ranks(8); }, [] { return check_hp_ring(6); }}); }},
      {3, "Schur classes outside the box vanish; box classes span, r <= 3, n <= 6",
       [] { return check_prop1(3, 6); }},
      {4, "0 -> (r,n-1) -> (r,n) -> (r-1,n-1) -> 0 exact, r <= 3, n <= 6",
       [] { return all_of({[] { return check_exact_sequence(3, 6); }, [] { return check_prop2(3, 6); }}); }},
      {5, "Cartan formula on all splits of <= 5 roots; zero roots give trivial classes",
       [] { return check_cartan(5); }},
      {6, "perp-bundle identities for <= 4 roots", [] { return check_perp(4); }},
      {7, "degrees <= 6 inject into HGr(r, r+8) compatibly with alpha, r <= 3",
       [] {
         CheckOutcome out;
         for (int r = 1; r <= 3; ++r) out.absorb(tower_check(r, 6, {r + 8, r + 9}));
         return out;
       }},
      {8, "multiplication by p_r is injective with image ker(p_r -> 0), r <= 3, D <= 8",
       [] {
         CheckOutcome out;
         for (int r = 1; r <= 3; ++r) {
           for (int d = 0; d <= 8; ++d) out.absorb(thom_ideal_check(r, d));
         }
         return out;
       }},
      {9, "coproduct images of p_1, p_2, p_{r+s} for r,s <= 3; injective for r+s <= 5, D <= 7",
       [] {
         CheckOutcome out = check_coproduct_formulas(3, 8);
         for (int r = 1; r <= 4; ++r) {
           for (int s = 1; r + s <= 5; ++s) out.absorb(coproduct_injectivity(r, s, 7));
         }
         return out;
       }},
      {10, "M(0) = I, M(1) = block swap, M symplectic; shift product N=5, K=4",
       [] {
         CheckOutcome out = check_paper_matrix();
         const TMatrix m = paper_homotopy_matrix();
         if (!(m.evaluate(0) == TMatrix::identity(4))) out.fail("M(0) is not I_4");
         if (!(m.evaluate(1) == block_swap4())) out.fail("M(1) is not the block swap");
         out.absorb(shift_product_check(5, 4, m));
         return out;
       }},
  };

  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    CheckOutcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %d: %s", outcome.pass ? "PASS" : "FAIL", c.id, c.title.c_str());
    if (!outcome.pass) std::printf(" -- %s", outcome.witness.c_str());
    if (!outcome.note.empty()) std::printf(" [%s]", outcome.note.c_str());
    std::printf("\n");
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %lld ms\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              static_cast<long long>(ms));
  return failures == 0 ? 0 : 1;
}
