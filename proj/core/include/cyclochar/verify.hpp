#pragma once

#include <string>

#include "cyclochar/characters.hpp"

namespace cyclochar {

// Outcome of one identity suite over all keys of P_{n,m}; `detail` names the
// first failing key when ok == false.
struct VerifyResult {
    bool ok = true;
    std::string detail;
};

VerifyResult verify_oracle(int m, int n);          // recursion vs Schur coefficients
VerifyResult verify_dual(int m, int n);            // lowering vs raising recursion
VerifyResult verify_tableau(int m, int n);         // recursion vs chain sums
VerifyResult verify_pivot(int m, int n);           // independence of the stripped part
VerifyResult verify_regev(int m, int n);           // super character vs both hook sums
VerifyResult verify_hooksum(int m, int n);         // hook-sum identity lhs == rhs
VerifyResult verify_lpar(int m, int n);            // single-partition algorithm vs recursion
VerifyResult verify_bitrace(int m, int n);         // matrix sum vs character sum
VerifyResult verify_orthogonality(int m, int n);   // second orthogonality at roots of unity
VerifyResult verify_all(int m, int n);

}  // namespace cyclochar
