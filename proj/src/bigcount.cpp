#include "bigcount.hpp"

namespace noncross {

BigCount factorial(unsigned n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigCount binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigCount power(const BigCount& base, unsigned exp) {
  BigCount r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigCount multinomial(const std::vector<unsigned>& parts) {
  BigCount r = 1;
  unsigned long total = 0;
  for (unsigned p : parts) {
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

BigCount lah(unsigned n, unsigned k) {
  if (k < 1 || k > n) return 0;
  BigCount r = factorial(n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(k).get_mpz_t());
  return r * binomial(n - 1, k - 1);
}

BigCount narayana(unsigned n, unsigned k) {
  if (k < 1 || k > n) return 0;
  BigCount r = binomial(n, k) * binomial(n, k - 1);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n);
  return r;
}

BigCount catalan(unsigned n) {
  BigCount r = binomial(2ul * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

}  // namespace noncross
