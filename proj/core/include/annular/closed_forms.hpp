#pragma once

#include <gmpxx.h>

#include "annular/permutation.hpp"

namespace annular {

/// Exact nonnegative counts.
using BigCount = mpz_class;

BigCount factorial(int n);
/// C(n, k); zero outside 0 <= k <= n.
BigCount binomial(int n, int k);
BigCount power(int base, int exponent);

/// Minimal transitive factorizations of a permutation of cycle type lambda:
/// (n+l-2)! n^(l-3) prod lambda_i^lambda_i / (lambda_i - 1)!.
/// Evaluated in exact rationals; throws InternalError if not integral.
BigCount gj_count(const Partition& lambda);

/// pq/(p+q) C(p+q, q) p^p q^q.
BigCount pq_count(int p, int q);

/// Disconnected maximal chains of the type B annular interval:
/// C(p+q, q) p^p q^q.
BigCount dmc_count(int p, int q);
/// sum_{c=1}^{p} 2c C(p+q, p-c) p^(p-c) q^(q+c).
BigCount cmc_sum(int p, int q);
/// 2pq/(p+q) C(p+q, q) p^p q^q.
BigCount cmc_closed(int p, int q);
/// All maximal chains: dmc_count + cmc_sum.
BigCount nc_chain_count_B(int p, int q);

/// sum_{c=1}^{p} c C(p+q, p-c) p^(p-c) q^(q+c).
BigCount kk_lhs(int p, int q);
/// pq/(p+q) C(p+q, q) p^p q^q.
BigCount kk_rhs(int p, int q);

/// Maximal chains of the marked type A poset (same sum as kk_lhs).
BigCount marked_chain_count(int p, int q);

BigCount catalan(int n);
BigCount central_binomial(int n);
/// C(2p, p) C(2q, q).
BigCount disconnected_B_count(int p, int q);
/// 2 C_p C_q.
BigCount disconnected_marked_count(int p, int q);

}  // namespace annular
