#include <doctest.h>

#include "annular/closed_forms.hpp"
#include "annular/errors.hpp"

using namespace annular;

TEST_CASE("factorials, binomials and powers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigCount("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(power(5, 5) == 3125);
  CHECK(catalan(5) == 42);
  CHECK(central_binomial(4) == 70);
}

TEST_CASE("transitive factorization counts") {
  const std::pair<const char*, const char*> cases[] = {
      {"2,1", "8"},     {"1,1", "1"},         {"1,1,1", "24"},   {"3,2", "1296"},
      {"5", "125"},     {"4", "16"},          {"2,2", "96"},     {"1,1,1,1,1", "1008000"},
      {"3,2,1", "272160"}, {"7", "16807"},    {"4,3", "414720"}, {"2,2,2,1", "162570240"},
  };
  for (const auto& [lambda, value] : cases) {
    CAPTURE(lambda);
    CHECK(gj_count(Partition::parse(lambda)) == BigCount(value));
  }
}

TEST_CASE("annular chain counts") {
  struct Row {
    int p, q;
    const char *pq, *cmc, *dmc, *total, *dis_b, *dis_m;
  };
  const Row rows[] = {
      {1, 1, "1", "2", "2", "4", "4", "2"},
      {2, 1, "8", "16", "12", "28", "12", "4"},
      {1, 2, "8", "16", "12", "28", "12", "4"},
      {2, 2, "96", "192", "96", "288", "36", "8"},
      {3, 1, "81", "162", "108", "270", "40", "10"},
      {3, 2, "1296", "2592", "1080", "3672", "120", "20"},
      {3, 3, "21870", "43740", "14580", "58320", "400", "50"},
      {4, 3, "414720", "829440", "241920", "1071360", "1400", "140"},
      {5, 5, "6152343750", "12304687500", "2460937500", "14765625000", "63504", "3528"},
  };
  for (const auto& r : rows) {
    CAPTURE(r.p);
    CAPTURE(r.q);
    CHECK(pq_count(r.p, r.q) == BigCount(r.pq));
    CHECK(kk_lhs(r.p, r.q) == BigCount(r.pq));
    CHECK(kk_rhs(r.p, r.q) == BigCount(r.pq));
    CHECK(marked_chain_count(r.p, r.q) == BigCount(r.pq));
    CHECK(cmc_sum(r.p, r.q) == BigCount(r.cmc));
    CHECK(cmc_closed(r.p, r.q) == BigCount(r.cmc));
    CHECK(dmc_count(r.p, r.q) == BigCount(r.dmc));
    CHECK(nc_chain_count_B(r.p, r.q) == BigCount(r.total));
    CHECK(disconnected_B_count(r.p, r.q) == BigCount(r.dis_b));
    CHECK(disconnected_marked_count(r.p, r.q) == BigCount(r.dis_m));
  }
}

TEST_CASE("connected chains are twice the marked count") {
  for (int p = 1; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) CHECK(cmc_sum(p, q) == 2 * kk_lhs(p, q));
  }
}
