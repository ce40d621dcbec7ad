#pragma once

namespace elympus {

// Bimodal deceptive block of even order k over unitation u:
// k/2 at u in {0, k}, otherwise k/2 - |u - k/2| - 1.
double bim_k(int u, int k);

// Standard trap: k at u = k, otherwise k - 1 - u.
double dec_k(int u, int k);

}  // namespace elympus
