#pragma once

#include <string>
#include <vector>

#include "cofree/cotensor.hpp"
#include "cofree/grouphopf.hpp"

namespace cofree {

using CartanMatrix = std::vector<std::vector<int>>;

/// Name of the letter xi_ij in the Clifford preset ("xi12", or "xi10_11" once n >= 10).
std::string clifford_xi_name(int n, int i, int j);

/// V = span{v_i} + span{xi_ij : i <= j} over Z/2 = <eps>, deg v_i = eps,
/// eps.v_i = -v_i, m(v_i, v_j) = xi_ij for i <= j and 0 otherwise.
YDSpec build_clifford(int n);

/// V = span{E_i, F_i, xi_i} over Z^n = <K_i>, K_i.E_j = q^{c_ij} E_j,
/// K_i.F_j = q^{-c_ij} F_j, deg E_i = deg F_i = K_i, deg xi_i = K_i^2,
/// m(E_i, F_j) = delta_ij xi_i.
YDSpec build_uqg(const CartanMatrix& cartan);

/// Letters x_1..x_n over the trivial group (flip braiding) with
/// x_a x_b = x_{a+b} when a + b <= n and 0 otherwise.
YDSpec build_hoffman(int n);

/// v_i * v_j + v_j * v_i = xi_ij for all i <= j through both the cotensor
/// star and the smash product, and (1#eps)(v_i#1) = -(v_i#eps).
CheckResult check_clifford_relations(const HopfBimodule& m, int n);

/// E_i * F_j - q^{-c_ij} F_j * E_i = delta_ij xi_i through both products,
/// and (1#K_i)(E_j#1)(1#K_i^{-1}) = q^{c_ij} E_j#1.
CheckResult check_uqg_relations(const HopfBimodule& m, const CartanMatrix& cartan);

/// The degree-one part of (E_i, K)(F_j, K') equals delta_ij q^{-sum_k a_k c_kj} (xi_i, KK')
/// for all K, K' with exponents in [-bound, bound].
CheckResult check_uqg_mult_table(const HopfBimodule& m, const CartanMatrix& cartan, int bound = 1);

}  // namespace cofree
