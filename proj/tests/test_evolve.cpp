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

std::string ev(const char* s, Flavor f) { return to_tokens(evolve_step(parse_path(s), f)); }
std::string dev(const char* s, Flavor f) { return to_tokens(devolve_step(parse_path(s), f)); }

constexpr Flavor kLittle = Flavor::Little;
constexpr Flavor kBig = Flavor::Big;

}  // namespace

TEST_CASE("flavor names") {
  CHECK(parse_flavor("little") == kLittle);
  CHECK(parse_flavor("e") == kLittle);
  CHECK(parse_flavor("big") == kBig);
  CHECK(parse_flavor("E") == kBig);
  CHECK(flavor_name(kBig) == "big");
  CHECK(code_of([] { parse_flavor("medium"); }) == ErrorCode::OutOfRange);
}

TEST_CASE("evolve_step examples") {
  CHECK(ev("Ud", kBig) == "HH");
  CHECK(ev("UUDd", kBig) == "UHHD");
  CHECK(ev("UUHHDd", kBig) == "UHHHHD");
  CHECK(ev("UUdD", kLittle) == "UHHD");
  CHECK(ev("UUDD", kLittle) == "UUDD");
  CHECK(ev("", kBig).empty());
}

TEST_CASE("evolve_step rejects a special of the wrong parity") {
  CHECK(code_of([] { evolve_step(parse_path("UUdD"), kBig); }) == ErrorCode::NotHybrid);
  CHECK(code_of([] { evolve_step(parse_path("Ud"), kLittle); }) == ErrorCode::NotHybrid);
}

TEST_CASE("last_added_horizontal examples") {
  CHECK(last_added_horizontal(parse_path("UUHHDd"), kBig) == 3);
  CHECK(last_added_horizontal(parse_path("HH"), kBig) == 1);
  CHECK(last_added_horizontal(parse_path("UHHHHD"), kBig) == 2);
  CHECK(code_of([] { last_added_horizontal(parse_path("UD"), kBig); }) == ErrorCode::NoHorizontal);
}

TEST_CASE("devolve_step examples") {
  CHECK(dev("UHHD", kLittle) == "UUdD");
  CHECK(dev("UHHD", kBig) == "UUDd");
  CHECK(dev("HH", kBig) == "Ud");
  CHECK(dev("UHHHHD", kBig) == "UUHHDd");
  CHECK(code_of([] { devolve_step(parse_path("UD"), kBig); }) == ErrorCode::NoHorizontal);
  CHECK(code_of([] { devolve_step(parse_path("HHUd"), kLittle); }) == ErrorCode::NotHybrid);
}

TEST_CASE("evolve_full examples") {
  const auto a = evolve_full(parse_path("UUdD"), kLittle);
  CHECK(to_tokens(a.final_path()) == "UHHD");
  CHECK(a.snapshots.size() == 1);

  const auto b = evolve_full(parse_path("UdUd"), kBig);
  CHECK(to_tokens(b.final_path()) == "HHHH");
  CHECK(b.times_left_to_right() == std::vector<int>{1, 2});

  const auto c = evolve_full(parse_path("UUUdDd"), kBig);
  CHECK(to_tokens(c.final_path()) == "UHHHHD");
  CHECK(c.times_left_to_right() == std::vector<int>{2, 1});
  CHECK(c.creation_order == std::vector<int>{4, 2});

  CHECK(code_of([] { evolve_full(parse_path("UHHD"), kLittle); }) == ErrorCode::WrongStartClass);
  CHECK(code_of([] { evolve_full(parse_path("Ud"), kLittle); }) == ErrorCode::WrongStartClass);
}

TEST_CASE("devolve_full examples") {
  CHECK(to_tokens(devolve_full(parse_path("UHHD"), kLittle)) == "UUdD");
  CHECK(to_tokens(devolve_full(parse_path("HHHH"), kBig)) == "UdUd");
  for (const auto& p : generate({PathClassKind::Esdp, 8})) CHECK(devolve_full(p, kLittle) == p);
  CHECK(code_of([] { devolve_full(parse_path("HHUd"), kLittle); }) == ErrorCode::NotHybrid);
}

TEST_CASE("is_hybrid examples") {
  const auto p = parse_path("HHUd");
  CHECK(is_hybrid(p, kBig));
  CHECK_FALSE(classify(p).big_schroeder);
  CHECK_FALSE(classify(p).osdp);
  CHECK_FALSE(is_hybrid(p, kLittle));
  CHECK(is_hybrid(parse_path("UUDD"), kLittle));
  CHECK(is_hybrid(parse_path("UUDD"), kBig));
  CHECK(is_hybrid(LatticePath{}, kBig));
}

TEST_CASE("evolve_step agrees with the string oracle on every closure path") {
  for (bool little : {true, false}) {
    const Flavor f = little ? kLittle : kBig;
    for (int len = 0; len <= 10; len += 2)
      for (const auto& s : oracle::closure(len, little)) CHECK(ev(s.c_str(), f) == oracle::evolve(s));
  }
}

TEST_CASE("is_hybrid recognises exactly the oracle closure among all paths, lengths up to 10") {
  for (bool little : {true, false}) {
    const Flavor f = little ? kLittle : kBig;
    for (int len = 0; len <= 10; len += 2) {
      const auto closure = oracle::closure(len, little);
      std::size_t recognised = 0;
      for (const auto& s : oracle::all_paths(len)) {
        const bool h = is_hybrid(parse_path(s), f);
        CHECK_MESSAGE(h == (closure.count(s) == 1), s);
        recognised += h;
      }
      CHECK(recognised == closure.size());
    }
  }
}

TEST_CASE("creation times agree with the tagged oracle") {
  for (bool little : {true, false}) {
    const Flavor f = little ? kLittle : kBig;
    for (int len = 0; len <= 12; len += 2)
      for (const auto& p : generate({little ? PathClassKind::Esdp : PathClassKind::Osdp, len}))
        CHECK(evolve_full(p, f).times_left_to_right() == oracle::creation_times(to_tokens(p)));
  }
}

TEST_CASE("trace invariants") {
  for (const auto& p : generate({PathClassKind::Osdp, 10})) {
    const auto t = evolve_full(p, kBig);
    const auto j = p.count(Step::SpecialDown);
    CHECK(t.snapshots.size() == j);
    CHECK(t.final_path().count(Step::SpecialDown) == 0);
    for (const auto& s : t.snapshots) {
      CHECK(s.count(Step::SpecialDown) + s.count(Step::Horiz) == j);
      CHECK(s.length() == p.length());
    }
    for (int pos : t.creation_order)
      CHECK(t.final_path()[t.final_path().index_at(pos)] == Step::Horiz);
  }
}

TEST_CASE("devolve inverts evolve on every hybrid path, lengths up to 12") {
  for (Flavor f : {kLittle, kBig}) {
    const auto kind = f == kLittle ? PathClassKind::LittleHybrid : PathClassKind::BigHybrid;
    for (int len = 0; len <= 12; len += 2) {
      for (const auto& p : generate({kind, len})) {
        if (p.count(Step::SpecialDown) > 0) CHECK(devolve_step(evolve_step(p, f), f) == p);
        if (p.count(Step::Horiz) > 0) CHECK(evolve_step(devolve_step(p, f), f) == p);
      }
    }
  }
}

TEST_CASE("evolve_to_schroeder accepts any hybrid") {
  const auto t = evolve_to_schroeder(parse_path("HHUd"), kBig);
  CHECK(to_tokens(t.final_path()) == "HHHH");
  CHECK(t.creation_order == std::vector<int>{3});
}
