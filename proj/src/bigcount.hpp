#pragma once

#include <gmpxx.h>

#include <vector>

namespace noncross {

// Exact nonnegative count. Everything in this library is integer-exact;
// there is no floating point anywhere.
using BigCount = mpz_class;

BigCount factorial(unsigned n);

// C(n, k); 0 when k > n.
BigCount binomial(unsigned long n, unsigned long k);

BigCount power(const BigCount& base, unsigned exp);

// (sum parts)! / prod(parts_i!), computed as a product of binomials so every
// intermediate stays integral. Empty input gives 1.
BigCount multinomial(const std::vector<unsigned>& parts);

// Partitions of [n] into a set of k nonempty lists: (n!/k!) C(n-1, k-1).
// Returns 0 outside 1 <= k <= n so sums over k need no guards.
BigCount lah(unsigned n, unsigned k);

// Dyck n-paths with k peaks: (1/n) C(n,k) C(n,k-1), divided last to keep the
// intermediates integral. Returns 0 outside 1 <= k <= n.
BigCount narayana(unsigned n, unsigned k);

// C(2n, n) / (n + 1).
BigCount catalan(unsigned n);

}  // namespace noncross
