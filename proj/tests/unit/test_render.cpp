#include <doctest.h>

#include "annular/annular_poset.hpp"
#include "annular/marked_poset.hpp"
#include "annular/render.hpp"

using namespace annular;

TEST_CASE("permutations render as cycle lists") {
  CHECK(to_json(Permutation::parse(3, "(1 3)")).dump() == "[[1,3],[2]]");
}

TEST_CASE("signed permutations render zero and paired cycles") {
  const auto j = to_json(SignedPermutation::parse(3, "[1 2]((3))"));
  CHECK(j.dump() == R"j([{"zero":[1,2]},{"paired":[3]}])j");
}

TEST_CASE("reflections and words") {
  CHECK(to_json(BTransposition::zero(2)) == "[2]");
  const std::vector<BTransposition> w = {BTransposition::paired(1, -2), BTransposition::zero(1)};
  CHECK(word_to_json(w).dump() == R"j(["((1 -2))","[1]"])j");
  CHECK(word_b_from_json(word_to_json(w)) == w);
  const std::vector<Permutation> a = {Permutation::parse(3, "(2 3)")};
  CHECK(word_to_json(a).dump() == "[[2,3]]");
}

TEST_CASE("reflection parsing") {
  CHECK(parse_btransposition("((2 -1))") == BTransposition::paired(1, -2));
  CHECK(parse_btransposition("[3]") == BTransposition::zero(3));
  CHECK_THROWS(parse_btransposition("[1 2]"));
  CHECK_THROWS(parse_btransposition("((1))"));
}

TEST_CASE("counts render as decimal strings") {
  CHECK(to_json(BigCount("14765625000")) == "14765625000");
}

TEST_CASE("marked elements and encodings") {
  const MarkedElement e{Permutation::parse(2, "(1 2)"), 0};
  CHECK(to_json(e).dump() == R"j({"cycles":[[1,2]],"z":0})j");
  const ChainEncoding enc{1, 1, {1}, {{}}, {}, {{2}}, EncodingFlavor::typeA};
  const auto j = to_json(enc);
  CHECK(j["c"] == 1);
  CHECK(j["RI"].dump() == "[[2]]");
}

TEST_CASE("chains carry elements, labels and connectivity") {
  AnnularPoset poset(1, 1);
  bool first = true;
  poset.for_each_maximal_chain([&](const MaximalChainB& chain) {
    const auto j = chain_to_json(chain, poset);
    CHECK(j["elements"].size() == 3);
    CHECK(j["phi"].size() == 2);
    CHECK(j["connected"].is_boolean());
    if (first) CHECK(j["elements"][0] == "e");
    first = false;
    return true;
  });
}
