// closed_form.hpp — exact predictions for the k-power domination numbers of
// both families, the vertex cover number of the aux family, and the
// two-class cover recurrence. All arithmetic is exact integer arithmetic.
#pragma once

#include "kpower/generators.hpp"

#include <vector>

namespace kpower {

enum class Regime { singleton, formula, handcase };
std::string_view regime_name(Regime r);

struct ClosedFormPrediction {
    Family family = Family::pseudofractal;
    int g = 0;
    int k = 0;
    long long value = 0;
    Regime regime = Regime::formula;
};

// Largest generation at which a single hub seed suffices for slack k, i.e.
// the unique n with 2^(n-1)-1 <= k <= 2^n-2. Computed via bit length, never
// floating point. k must be >= 1.
int singleton_generation_limit(int k);

// Pseudofractal family: 1 when g <= n, else (3^(g-n-1)+3)/2 with
// n = singleton_generation_limit(k).
ClosedFormPrediction predict_pseudofractal(int g, int k);

// Gasket family: 1 for k >= 2 or g = 1; (3^(g-2)+1)/2 for k = 1, g >= 2.
ClosedFormPrediction predict_sierpinski(int g, int k);

ClosedFormPrediction predict(Family family, int g, int k);

// Vertex cover number of the aux family: 1 at g = 1, (3^(g-2)+3)/2 beyond
// (the unique closed form with values 1, 2, 3 at g = 1..3 satisfying
// phi_{g+1} = 3*phi_g - 3).
long long aux_cover_number_closed(int g);

// Minimum cover sizes over covers containing exactly two / exactly three of
// the aux family's hubs, iterated from the hand-checked base (4, 3) at g=3:
//   two_hub'   = min(3*two_hub - 2, 2*two_hub + three_hub - 2)
//   three_hub' = min(two_hub + 2*three_hub - 3, 3*three_hub - 3)
// The -2 in the two-hub branch is the oracle-adjudicated constant.
struct CoverClassSizes {
    int g = 0;
    long long two_hub = 0;    // exactly two hubs in the cover
    long long three_hub = 0;  // all three hubs in the cover
};
std::vector<CoverClassSizes> cover_class_recurrence(int g_target);

}  // namespace kpower
