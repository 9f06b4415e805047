#pragma once

#include "qadv/channels.hpp"
#include "qadv/random.hpp"

namespace qadv::fixtures {

// E measured in the computational basis selects identity (e=0) or complete
// dephasing (e=1) on the qubit A.
QuantumChannel controlled_id_dephasing();

// output is the jammer state: N(rho (x) sigma) = sigma
QuantumChannel jammer_swap();

// output is Alice's qubit, jammer ignored
QuantumChannel identity_on_A(std::size_t d_A = 2, std::size_t d_E = 2);

QuantumChannel dephasing_channel(double p);

// W(y|x,e) = BSC with flip probability p_e
ClassicalTable jammer_selected_bsc(double p0, double p1);

// W(y|x,e) = [y == x xor e]
ClassicalTable jammer_flipped_identity();

ClassicalTable random_classical_table(std::size_t nx, std::size_t ne,
                                      std::size_t ny, Rng& rng);

// random CPTP map via a normalized random Choi operator
QuantumChannel random_cptp(std::size_t d_A, std::size_t d_E, std::size_t d_B,
                           Rng& rng);

// classical randomized Neyman-Pearson optimum for diagonal states:
// -log2 min type-II error at type-I error <= eps, by exhaustive threshold
// and randomization search
double classical_np_value(const std::vector<double>& p,
                          const std::vector<double>& q, double eps);

}  // namespace qadv::fixtures
