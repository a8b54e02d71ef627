#include "annular/closed_forms.hpp"

#include <stdexcept>

#include "annular/errors.hpp"

namespace annular {

namespace {

BigCount integral(const mpq_class& q, const char* what) {
  mpq_class r = q;
  r.canonicalize();
  if (r.get_den() != 1) throw InternalError(std::string(what) + " produced a non-integral value");
  if (r < 0) throw InternalError(std::string(what) + " produced a negative value");
  return r.get_num();
}

void check_pq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
}

// sum_{c=1}^{p} weight(c) C(p+q, p-c) p^(p-c) q^(q+c)
template <class Weight>
BigCount connected_sum(int p, int q, Weight weight) {
  BigCount total = 0;
  for (int c = 1; c <= p; ++c) {
    total += weight(c) * binomial(p + q, p - c) * power(p, p - c) * power(q, q + c);
  }
  return total;
}

}  // namespace

BigCount factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigCount power(int base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in integer power");
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return r;
}

BigCount gj_count(const Partition& lambda) {
  const int n = lambda.n();
  const int l = lambda.num_parts();
  mpq_class value(factorial(n + l - 2));
  if (l >= 3) {
    value *= mpq_class(power(n, l - 3));
  } else {
    value /= mpq_class(power(n, 3 - l));
  }
  for (int part : lambda.parts()) {
    mpq_class factor(power(part, part), factorial(part - 1));
    factor.canonicalize();
    value *= factor;
  }
  return integral(value, "gj_count");
}

BigCount pq_count(int p, int q) {
  check_pq(p, q);
  mpq_class value(BigCount(p) * q * binomial(p + q, q) * power(p, p) * power(q, q), BigCount(p + q));
  return integral(value, "pq_count");
}

BigCount dmc_count(int p, int q) {
  check_pq(p, q);
  return binomial(p + q, q) * power(p, p) * power(q, q);
}

BigCount cmc_sum(int p, int q) {
  check_pq(p, q);
  return connected_sum(p, q, [](int c) { return BigCount(2 * c); });
}

BigCount cmc_closed(int p, int q) {
  check_pq(p, q);
  mpq_class value(BigCount(2) * p * q * binomial(p + q, q) * power(p, p) * power(q, q), BigCount(p + q));
  return integral(value, "cmc_closed");
}

BigCount nc_chain_count_B(int p, int q) { return dmc_count(p, q) + cmc_sum(p, q); }

BigCount kk_lhs(int p, int q) {
  check_pq(p, q);
  return connected_sum(p, q, [](int c) { return BigCount(c); });
}

BigCount kk_rhs(int p, int q) { return pq_count(p, q); }

BigCount marked_chain_count(int p, int q) { return kk_lhs(p, q); }

BigCount catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative number");
  return integral(mpq_class(binomial(2 * n, n), BigCount(n + 1)), "catalan");
}

BigCount central_binomial(int n) { return binomial(2 * n, n); }

BigCount disconnected_B_count(int p, int q) {
  check_pq(p, q);
  return central_binomial(p) * central_binomial(q);
}

BigCount disconnected_marked_count(int p, int q) {
  check_pq(p, q);
  return 2 * catalan(p) * catalan(q);
}

}  // namespace annular
