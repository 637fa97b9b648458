#pragma once

#include <vector>

#include "cyclochar/boundary.hpp"
#include "cyclochar/characters.hpp"
#include "cyclochar/cyclotomic.hpp"
#include "cyclochar/laurent.hpp"
#include "cyclochar/partition.hpp"

namespace cyclochar {

using Matrix = std::vector<std::vector<int>>;

// m-tuple of matrices, each with m columns of nonnegative integers; built for
// a multipartition mu so that row j of mats[r] sums to mu^{(r)}_j.
struct MultiMatrix {
    std::vector<Matrix> mats;

    int total_rows() const;
    int nonzero_entries() const;
    // column i (0-based) of all matrices, stacked in order
    Composition column_profile(int i) const;
};

// prod u_{f}^{i+1} over rows, f = rightmost nonzero column (1-based).
LaurentPoly u_weight(const MultiMatrix& M, int nvars);
std::vector<MultiMatrix> multimatrices_for(const MultiPartition& mu);

// Nonnegative integer matrices with the given margins, row by row.
std::vector<Matrix> margin_matrices(const Composition& row_sums, const Composition& col_sums);

// Geometric sum 1 + base + ... + base^{k-1}; the k == 0 convention is 1.
LaurentPoly qint(int k, const LaurentPoly& base);
// Product over entries of (base-1)^2 [entry]_{base^2}, empty entries count 1.
LaurentPoly wt_q_matrix(const Matrix& A, const LaurentPoly& base);

// Character of the permutation super representation attached to the
// superspace dimensions kvec | lvec.
LaurentPoly regev_value(const std::vector<int>& kvec, const std::vector<int>& lvec,
                        const MultiPartition& mu);

// Both sides of the hook-sum identity.
LaurentPoly hook_sum_lhs(const MultiPartition& mu, CharEngine& engine);
LaurentPoly hook_sum_rhs(const MultiPartition& mu);

// Second-orthogonality bitrace: the matrix-weighted sum and the character sum.
LaurentPoly mbtr_combinatorial(const MultiPartition& mu, const MultiPartition& nu);
LaurentPoly mbtr_via_characters(const MultiPartition& mu, const MultiPartition& nu,
                                CharEngine& engine);

// Step-by-step removal sums on the multipartition side (tau_list processed
// right to left, all steps colored by the exponent r).
LaurentPoly eta_multipartition(const MultiPartition& lam, const std::vector<Partition>& tau_list,
                               int r);
// The same algorithm on the single partition with empty m-core, using colored
// generalized ribbons and the crossing-corrected height.
LaurentPoly eta_partition(const Partition& lam, const std::vector<Partition>& tau_list, int r,
                          int m);

// Full character values assembled from the eta sums; both must agree with the
// recursion engine.
LaurentPoly mn_via_eta(const MultiPartition& lam, const MultiPartition& mu);
LaurentPoly lpar_chi(const MultiPartition& lam, const MultiPartition& mu);

// Branch factors of a single application step at a fixed assignment of
// removal sizes to components/colors; lets tests compare the two sides of the
// quotient correspondence combo by combo.
std::vector<LaurentPoly> eta_step_branches_multi(const MultiPartition& lam,
                                                 const std::vector<int>& sizes, int r);
std::vector<LaurentPoly> eta_step_branches_partition(const Partition& lam,
                                                     const std::vector<int>& sizes, int r, int m);

// sum_i (i+1) * l(mu^{(i)}) over 0-based components: the exponent carried by
// the one-row and one-column characters.
long long l_statistic(const MultiPartition& mu);

// Specializations of a full table.
CharTable typeA_table(const CharTable& table);  // m == 1, u_1 -> 1
CharTable typeB_table(const CharTable& table);  // m == 2, u_1 -> -1, u_2 prints as u

struct CycTable {
    int m = 1;
    int n = 0;
    std::vector<MultiPartition> order;
    std::vector<std::vector<CyclotomicNumber>> values;
};
CycTable reflection_table(const CharTable& table);  // q -> 1, u_i -> zeta^{i-1}

LaurentPoly specialize_typeA(const LaurentPoly& value);
LaurentPoly specialize_typeB(const LaurentPoly& value);

}  // namespace cyclochar
