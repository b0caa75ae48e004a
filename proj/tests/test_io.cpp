#include "monocat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "monocat/catalog.hpp"
#include "monocat/quadratic.hpp"

using namespace monocat;

namespace {

CrossedSemiBimodule phi_z2_identity() {
  const FiniteMonoid z2 = cyclic_group(2);
  const CrossedSemiModule s = validate_xsmod(validate_hom({0, 1}, z2, z2),
                                             trivial_action(ActionSide::right, z2, z2));
  return phi(s);
}

}  // namespace

TEST_CASE("monoid entries round-trip, including a nonzero identity index") {
  const FiniteMonoid k = build_qu_components(make_qu_params(2, 0, 0)).k;
  REQUIRE(k.identity == 1);
  std::ostringstream out;
  io::emit_monoid(out, "quk", k);

  io::Workspace ws;
  std::istringstream in(out.str());
  const auto entries = io::parse_stream(in, "<mem>", ws);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].kind == "monoid");
  CHECK_FALSE(entries[0].violation.has_value());
  CHECK(ws.monoids.at("quk") == k);
}

TEST_CASE("xbsmod bundles round-trip to identical values") {
  const CrossedSemiBimodule x = phi_z2_identity();
  std::ostringstream out;
  io::emit_xbsmod_bundle(out, "s", x);

  io::Workspace ws;
  std::istringstream in(out.str());
  const auto entries = io::parse_stream(in, "<mem>", ws);
  for (const auto& e : entries) CHECK_FALSE(e.violation.has_value());
  CHECK(ws.xbsmods.at("s") == x);

  // twice through the emitter is byte-identical
  std::ostringstream again;
  io::emit_xbsmod_bundle(again, "s", ws.xbsmods.at("s"));
  CHECK(again.str() == out.str());
}

TEST_CASE("xsmod and xmod bundles round-trip") {
  const FiniteMonoid z2 = cyclic_group(2);
  const FiniteMonoid z4 = cyclic_group(4);
  const CrossedSemiModule s = validate_xsmod(validate_hom({0, 1, 0, 1}, z4, z2),
                                             trivial_action(ActionSide::right, z2, z4));
  const CrossedModule m = validate_xmod(validate_hom({0, 1, 0, 1}, z4, z2),
                                        trivial_action(ActionSide::right, z2, z4));
  std::ostringstream out;
  io::emit_xsmod_bundle(out, "s", s);
  io::emit_xmod_bundle(out, "m", m);

  io::Workspace ws;
  std::istringstream in(out.str());
  io::parse_stream(in, "<mem>", ws);
  CHECK(ws.xsmods.at("s") == s);
  CHECK(ws.xmods.at("m") == m);
}

TEST_CASE("weak morphism entries round-trip") {
  const CrossedSemiBimodule x = phi_z2_identity();
  const WeakMorphism w = identity_weak(x);

  std::ostringstream out;
  io::emit_xbsmod_bundle(out, "s", x);
  io::emit_hom(out, "kap", "s_A", "s_A", w.kappa);
  io::emit_weak_morphism(out, "w", "s", "s", "kap", w);

  io::Workspace ws;
  std::istringstream in(out.str());
  io::parse_stream(in, "<mem>", ws);
  CHECK(ws.weak_morphisms.at("w").morphism == w);
  CHECK(ws.weak_morphisms.at("w").from == "s");
}

TEST_CASE("catalog names resolve without definitions") {
  io::Workspace ws;
  std::istringstream in("hom f z2 z2\n0 1\n");
  io::parse_stream(in, "<mem>", ws);
  CHECK(ws.homs.at("f").map == std::vector<Elem>{0, 1});
}

TEST_CASE("algebraic violations are attached to the entry, not thrown") {
  io::Workspace ws;
  std::istringstream in("monoid bad 2 0\n0 1\n0 0\n");
  const auto entries = io::parse_stream(in, "<mem>", ws);
  REQUIRE(entries.size() == 1);
  REQUIRE(entries[0].violation.has_value());
  CHECK(entries[0].violation->check == "bad-identity");
  CHECK(ws.monoids.count("bad") == 0);
}

TEST_CASE("structural problems raise ParseError with a location") {
  io::Workspace ws;
  {
    std::istringstream in("monoid m 2 0\n0 1\n");
    CHECK_THROWS_AS(io::parse_stream(in, "f.txt", ws), io::ParseError);
  }
  {
    std::istringstream in("frobnicate x\n");
    try {
      io::parse_stream(in, "f.txt", ws);
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.file() == "f.txt");
      CHECK(e.line() == 1);
    }
  }
  {
    std::istringstream in("hom f nosuch z2\n0\n");
    CHECK_THROWS_AS(io::parse_stream(in, "f.txt", ws), io::ParseError);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  io::Workspace ws;
  std::istringstream in("# a comment\n\nmonoid m 1 0   # trailing\n0\n");
  const auto entries = io::parse_stream(in, "<mem>", ws);
  CHECK(entries.size() == 1);
  CHECK(ws.monoids.count("m") == 1);
}

TEST_CASE("load_directory resolves names across files in sorted order") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "monocat_io_test";
  fs::create_directories(dir);
  {
    std::ofstream a(dir / "a.txt");
    io::emit_monoid(a, "base", cyclic_group(3));
  }
  {
    std::ofstream b(dir / "b.txt");
    b << "hom h base base\n0 1 2\n";
  }
  io::Workspace ws;
  const auto entries = io::load_directory(dir, ws);
  CHECK(entries.size() == 2);
  CHECK(ws.homs.count("h") == 1);
  fs::remove_all(dir);
}
