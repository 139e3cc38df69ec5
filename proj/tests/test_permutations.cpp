#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "schroeder/enumerate.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/permutations.hpp"
#include "schroeder/series.hpp"

using namespace schroeder;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalMismatch;
}

Permutation perm(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("parse and format") {
  CHECK(perm("2413").entries() == std::vector<int>{2, 4, 1, 3});
  CHECK(parse_permutation("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK(format_permutation(parse_permutation("10,1,2,3,4,5,6,7,8,9")) == "10,1,2,3,4,5,6,7,8,9");
  CHECK(format_permutation(perm("312")) == "312");
  CHECK(code_of([] { perm("112"); }) == ErrorCode::InvalidPermutation);
  CHECK(code_of([] { perm("13"); }) == ErrorCode::InvalidPermutation);
  CHECK(code_of([] { perm("1a"); }) == ErrorCode::InvalidPermutation);
}

TEST_CASE("avoids_231 examples") {
  CHECK_FALSE(avoids_231(perm("12584367")));
  CHECK(avoids_231(perm("321")));
  int count = 0;
  std::vector<int> p{1, 2, 3, 4};
  do count += avoids_231(Permutation(p));
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 14);
}

TEST_CASE("avoids_231 agrees with the cubic oracle, n up to 8") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do CHECK(avoids_231(Permutation(p)) == !oracle::contains_231(p));
    while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("extract_permutation examples") {
  CHECK(format_permutation(extract_permutation(parse_path("UdUd"), Flavor::Big)) == "12");
  CHECK(format_permutation(extract_permutation(parse_path("UUUdDd"), Flavor::Big)) == "21");
  CHECK(extract_permutation(LatticePath{}, Flavor::Big).size() == 0);
  CHECK(code_of([] { extract_permutation(parse_path("UHHD"), Flavor::Big); }) == ErrorCode::WrongStartClass);
}

TEST_CASE("good insertion examples") {
  CHECK(good_insertion_positions(perm("132")) == std::vector<int>{0, 1});
  CHECK(good_insertion_positions(perm("1")) == std::vector<int>{0});
  CHECK(good_insertion_positions(perm("12")) == std::vector<int>{0, 1});
  CHECK(code_of([] { good_insertion_positions(perm("231")); }) == ErrorCode::Not231Avoiding);
}

TEST_CASE("good insertions agree with brute force, n up to 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : avoiders_231(n)) {
      std::vector<int> want;
      for (int k = 0; k < n; ++k) {
        auto q = p.entries();
        q.insert(q.begin() + k, n + 1);
        if (!oracle::contains_231(q)) want.push_back(k);
      }
      CHECK(good_insertion_positions(p) == want);
    }
  }
}

TEST_CASE("build examples") {
  CHECK(to_tokens(build_osdp(perm("1"))) == "Ud");
  CHECK(to_tokens(build_osdp(perm("12"))) == "UdUd");
  CHECK(to_tokens(build_osdp(perm("21"))) == "UUUdDd");
  CHECK(to_tokens(build_esdp(perm("1"))) == "UUdD");
  CHECK(to_tokens(build_esdp(Permutation{})) == "UD");
  CHECK(to_tokens(build_esdp(perm("21"))) == "UUUUdDdD");
  CHECK(code_of([] { build_osdp(perm("231")); }) == ErrorCode::Not231Avoiding);
}

TEST_CASE("avoiders are Catalan many and match the filtered symmetric group") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<Permutation> brute;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do
      if (!oracle::contains_231(p)) brute.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    CHECK(avoiders_231(n) == brute);
    CHECK(Integer(static_cast<unsigned long>(brute.size())) == catalan(n));
  }
}

TEST_CASE("extracted permutations avoid 231, lengths up to 12") {
  for (int len = 0; len <= 12; len += 2) {
    for (const auto& p : generate({PathClassKind::Esdp, len}))
      CHECK(!oracle::contains_231(extract_permutation(p, Flavor::Little).entries()));
    for (const auto& p : generate({PathClassKind::Osdp, len}))
      CHECK(!oracle::contains_231(extract_permutation(p, Flavor::Big).entries()));
  }
}

TEST_CASE("extract after build is the identity, n up to 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : avoiders_231(n)) {
      const auto o = build_osdp(p);
      CHECK(classify(o).osdp);
      CHECK(o.count(Step::SpecialDown) == p.size());
      CHECK(extract_permutation(o, Flavor::Big) == p);
      CHECK(extract_permutation(build_esdp(p), Flavor::Little) == p);
    }
  }
}

TEST_CASE("length distribution examples") {
  CHECK(length_distribution(3).counts == std::map<int, std::uint64_t>{{10, 1}, {8, 3}, {6, 1}});
  CHECK(length_distribution(4).counts == std::map<int, std::uint64_t>{{14, 1}, {12, 6}, {10, 6}, {8, 1}});
  CHECK(length_distribution(1).counts == std::map<int, std::uint64_t>{{2, 1}});
  CHECK(length_distribution(4).to_polynomial() == "q^14 + 6q^12 + 6q^10 + q^8");
  CHECK(length_distribution(6).to_polynomial() == "q^22 + 15q^20 + 50q^18 + 50q^16 + 15q^14 + q^12");
}

TEST_CASE("length distribution counts built path lengths") {
  for (int n = 0; n <= 7; ++n) {
    std::map<int, std::uint64_t> want;
    for (const auto& p : avoiders_231(n)) ++want[build_osdp(p).length()];
    CHECK(length_distribution(n).counts == want);
  }
}

TEST_CASE("horiz_order_precedes examples") {
  CHECK(horiz_order_precedes(parse_path("UUUdDd"), 4, 6));
  CHECK_FALSE(horiz_order_precedes(parse_path("UdUd"), 2, 4));
  CHECK_FALSE(horiz_order_precedes(parse_path("UUdDUd"), 3, 6));
  CHECK(code_of([] { horiz_order_precedes(parse_path("UUUdDd"), 5, 6); }) == ErrorCode::NotSpecial);
  CHECK(code_of([] { horiz_order_precedes(parse_path("UUUdDd"), 6, 4); }) == ErrorCode::OutOfRange);
}
