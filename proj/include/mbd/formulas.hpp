#pragma once

#include <cstdint>

#include "mbd/game_value.hpp"
#include "mbd/graph.hpp"

namespace mbd {

/// floor(log2 x) for x >= 1.
int floor_log2(std::uint64_t x);
/// ceil(log2 x) for x >= 1.
int ceil_log2(std::uint64_t x);

/// gamma'_SMB(P_n): floor(log2 n) + 1 for odd n, infinite for even n.
/// Throws std::invalid_argument for n <= 0.
GameValue path_gamma_smb_prime(int n);

/// (2^ceil(log2 n) - n) / 2 + 1 for even n >= 4.
int sigma(int n);

struct TadpoleParams {
  int n = 3;  // cycle length
  int k = 1;  // tail length
};

struct StallerValues {
  GameValue gamma_smb;
  GameValue gamma_smb_prime;
};

/// Staller's numbers on T(n,k): the D-game is always infinite; the S-game
/// is ceil(log2(n + k + sigma(n))) when n is even and k is odd.
StallerValues tadpole_values(TadpoleParams p);

/// (k+1, inf) for F'_k.
StallerValues f_prime_values(int k);

struct RealizationTriple {
  int delta_plus_one;
  GameValue gamma_smb_prime;
  GameValue gamma_smb;
  bool operator==(const RealizationTriple&) const = default;
};

/// Expected (delta+1, gamma'_SMB, gamma_SMB) of G_{r,s,t}; needs 2 <= r <= s <= t.
RealizationTriple realization_triple(int r, int s, int t);

/// max{floor(log2 a) + 1, ceil(log2(b - 1))} >= ceil(log2(a + b)) - 1 for
/// a >= 1, b >= 2.
bool log_bound_holds(std::uint64_t a, std::uint64_t b);

struct DegreeAndOrderBounds {
  int min_degree_lb;    // delta + 1 <= gamma'_SMB
  int half_n_ub_sgame;  // gamma'_SMB <= ceil(n/2)
  int half_n_ub_dgame;  // gamma_SMB <= floor(n/2)
  bool operator==(const DegreeAndOrderBounds&) const = default;
};

DegreeAndOrderBounds bounds(const Graph& g);

}  // namespace mbd
