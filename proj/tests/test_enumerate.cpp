#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schroeder/enumerate.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/evolve.hpp"

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

std::vector<std::string> tokens(const std::vector<LatticePath>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_tokens(p));
  return out;
}

bool (*const kOracleClass[5])(const std::string&) = {
    oracle::is_dyck, oracle::is_esdp, oracle::is_osdp, oracle::is_little_schroeder, oracle::is_big_schroeder,
};

}  // namespace

TEST_CASE("class names") {
  for (int k = 0; k < 7; ++k) {
    const auto kind = static_cast<PathClassKind>(k);
    CHECK(parse_class(class_name(kind)) == kind);
  }
  CHECK(code_of([] { parse_class("motzkin"); }) == ErrorCode::OutOfRange);
}

TEST_CASE("generate examples") {
  CHECK(tokens(generate({PathClassKind::LittleHybrid, 4})) == std::vector<std::string>{"UDUD", "UHHD", "UUDD", "UUdD"});
  const auto big = tokens(generate({PathClassKind::BigHybrid, 4}));
  CHECK(big.size() == 11);
  CHECK(std::find(big.begin(), big.end(), "HHUd") != big.end());
  CHECK(tokens(generate({PathClassKind::Esdp, 4})) == std::vector<std::string>{"UDUD", "UUDD", "UUdD"});
  CHECK(tokens(generate({PathClassKind::Dyck, 0})) == std::vector<std::string>{""});
}

TEST_CASE("generate errors") {
  CHECK(code_of([] { generate({PathClassKind::Dyck, 24}); }) == ErrorCode::LengthTooLarge);
  CHECK(code_of([] { generate({PathClassKind::Dyck, 34}, {40, 1}); }) == ErrorCode::LengthTooLarge);
  CHECK(code_of([] { generate({PathClassKind::Dyck, 5}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { generate({PathClassKind::Dyck, -2}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { generate({PathClassKind::Dyck, 4, -1}); }) == ErrorCode::OutOfRange);
  CHECK(generate({PathClassKind::Dyck, 24}, {24, 1}).size() == 208012);
}

TEST_CASE("plain classes equal the filtered oracle, lengths up to 10") {
  for (int len = 0; len <= 10; len += 2) {
    const auto all = oracle::all_paths(len);
    for (int k = 0; k < 5; ++k) {
      std::vector<std::string> want;
      for (const auto& s : all)
        if (kOracleClass[k](s)) want.push_back(s);
      CHECK(tokens(generate({static_cast<PathClassKind>(k), len})) == want);
    }
  }
}

TEST_CASE("hybrid closures equal the oracle closure, lengths up to 10") {
  for (bool little : {true, false}) {
    for (int len = 0; len <= 10; len += 2) {
      const auto c = oracle::closure(len, little);
      CHECK(tokens(generate({little ? PathClassKind::LittleHybrid : PathClassKind::BigHybrid, len})) ==
            std::vector<std::string>(c.begin(), c.end()));
    }
  }
}

TEST_CASE("filters by specials and horizontals") {
  for (int len = 0; len <= 10; len += 2) {
    for (int k = 0; k < 7; ++k) {
      const auto kind = static_cast<PathClassKind>(k);
      std::size_t total = 0;
      for (int j = 0; j <= len / 2; ++j)
        for (int h = 0; j + h <= len / 2; ++h) {
          const auto g = generate({kind, len, j, h});
          for (const auto& p : g) {
            CHECK(p.count(Step::SpecialDown) == static_cast<std::size_t>(j));
            CHECK(p.count(Step::Horiz) == static_cast<std::size_t>(h));
          }
          total += g.size();
        }
      CHECK(total == generate({kind, len}).size());
    }
  }
}

TEST_CASE("count examples") {
  const std::vector<long> little{1, 1, 4, 18, 87, 439, 2278, 12052};
  const std::vector<long> big{1, 3, 11, 47, 219, 1075, 5459, 28383};
  for (int n = 0; n < 8; ++n) {
    CHECK(count({PathClassKind::LittleHybrid, 2 * n}) == little[static_cast<std::size_t>(n)]);
    CHECK(count({PathClassKind::BigHybrid, 2 * n}) == big[static_cast<std::size_t>(n)]);
    CHECK(count({PathClassKind::LittleHybrid, 2 * n}, CountMode::ClosedForm) == little[static_cast<std::size_t>(n)]);
    CHECK(count({PathClassKind::BigHybrid, 2 * n}, CountMode::ClosedForm) == big[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("Schröder paths by horizontals equal the image census of the starts, n up to 7") {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<std::uint64_t> little, big;
      for (const auto& p : generate({PathClassKind::Esdp, 2 * n, k}))
        little.insert(pack(evolve_full(p, Flavor::Little).final_path().steps()));
      for (const auto& p : generate({PathClassKind::Osdp, 2 * n, k}))
        big.insert(pack(evolve_full(p, Flavor::Big).final_path().steps()));
      const auto ls = generate_codes({PathClassKind::LittleSchroeder, 2 * n, std::nullopt, k});
      const auto bs = generate_codes({PathClassKind::BigSchroeder, 2 * n, std::nullopt, k});
      CHECK(std::vector<std::uint64_t>(little.begin(), little.end()) == ls);
      CHECK(std::vector<std::uint64_t>(big.begin(), big.end()) == bs);
      CHECK(count({PathClassKind::LittleSchroeder, 2 * n, std::nullopt, k}, CountMode::ClosedForm) == ls.size());
    }
  }
}

TEST_CASE("closed form and exhaustive modes agree") {
  for (int len = 0; len <= 12; len += 2)
    for (int k = 0; k < 7; ++k)
      for (int j = 0; j <= len / 2 + 1; ++j) {
        const auto kind = static_cast<PathClassKind>(k);
        CHECK(count({kind, len, j}) == count({kind, len, j}, CountMode::ClosedForm));
        CHECK(count({kind, len, std::nullopt, j}) == count({kind, len, std::nullopt, j}, CountMode::ClosedForm));
      }
}

TEST_CASE("threads do not change the closure") {
  for (int len : {10, 14})
    for (auto kind : {PathClassKind::LittleHybrid, PathClassKind::BigHybrid})
      CHECK(generate_codes({kind, len}, {22, 4}) == generate_codes({kind, len}, {22, 1}));
}

TEST_CASE("every generated hybrid is recognised, no duplicates") {
  for (int len = 0; len <= 12; len += 2) {
    for (Flavor f : {Flavor::Little, Flavor::Big}) {
      const auto g = generate({f == Flavor::Little ? PathClassKind::LittleHybrid : PathClassKind::BigHybrid, len});
      CHECK(std::set<LatticePath>(g.begin(), g.end()).size() == g.size());
      for (const auto& p : g) CHECK(is_hybrid(p, f));
    }
  }
}

TEST_CASE("bound check") {
  const auto one = bound_check(1);
  CHECK(one.big_hybrids == 3);
  CHECK(one.bound == 3);
  CHECK(one.holds);
  CHECK_FALSE(one.strict);
  CHECK(one.passed());
  const auto two = bound_check(2);
  CHECK(two.big_hybrids == 11);
  CHECK(two.bound == 10);
  CHECK(two.strict);
  const auto three = bound_check(3);
  CHECK(three.big_hybrids == 47);
  CHECK(three.bound == 39);
  for (int n = 1; n <= 8; ++n) CHECK(bound_check(n).passed());
}
