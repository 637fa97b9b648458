#pragma once

#include <map>
#include <vector>

#include "cyclochar/laurent.hpp"
#include "cyclochar/partition.hpp"

namespace cyclochar {

// Element of the m-fold tensor power of the symmetric function ring, written
// in the tensor power-sum basis.  Keys are m-tuples of partitions; `denom_pow`
// tracks a deferred factor (q - q^-1)^{-denom_pow} so that all stored
// coefficients stay Laurent.
struct PSymElem {
    int m = 1;
    std::map<std::vector<Partition>, LaurentPoly> terms;
    int denom_pow = 0;
};

// Power-sum expansion of the one-row Hall-Littlewood generator of degree r at
// t = q^-2: coefficient of p_lambda is (1/z_lambda) prod_i (1 - q^{-2 lambda_i}).
std::map<Partition, LaurentPoly> hl_in_p(int r, int nvars);

// Tensor power-sum expansion of the generator family attached to mu, the
// deferred denominator accumulating one power per part.
PSymElem q_mu_in_p(const MultiPartition& mu);

PSymElem psym_mul(const PSymElem& a, const PSymElem& b);

// Classical symmetric group character chi^lam(rho) by the single-ribbon
// recursion; memoized, safe for concurrent use.
long long sn_character(const Partition& lam, const Partition& rho);

// Frobenius-side character value: the Schur coefficient of the generator
// element, read off through classical characters.  Fully independent of the
// recursion engine.  Throws NonIntegerCoefficient if the exact division does
// not land in integer Laurent polynomials.
class OracleEngine {
public:
    explicit OracleEngine(int m) : m_(m) {}
    LaurentPoly oracle_chi(const MultiPartition& lam, const MultiPartition& mu);

private:
    int m_;
    std::map<MultiPartition, PSymElem> cache_;
};

// <q_tau(x;t), q_rho(x;t)> for compositions in one alphabet, computed through
// the power-sum expansions; used to cross-check the matrix-weighted sum.
LaurentPoly hl_inner_product(const Composition& tau, const Composition& rho, int nvars);

}  // namespace cyclochar
