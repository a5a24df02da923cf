#include <doctest.h>

#include <cmath>
#include <cstring>

#include "sixeq/error.hpp"
#include "sixeq/state.hpp"
#include "test_support.hpp"

using namespace sixeq;
using sixeq::testing::rel_close;

namespace {
const EosParams kIdeal{1.4, 0.0, 0.0};
const EosParams kWater{4.4, 6e8, 0.0};

const PrimitiveState kWaterAirLeft{1.0 - 1e-6, 1000.0, 1.0, {0.0, 0.0}, 1e9, 1e9};

// pressure tolerance is taken relative to p + gamma pi (the affine law's natural scale)
bool prim_close(const PrimitiveState& a, const PrimitiveState& b, const EosParams& e1,
                const EosParams& e2, double tol) {
  auto pclose = [&](double x, double y, const EosParams& e) {
    return std::abs(x - y) <= tol * (std::abs(x) + e.gamma * e.pi_inf);
  };
  auto vclose = [&](double x, double y, double scale) { return std::abs(x - y) <= tol * scale; };
  const double vs = std::max({std::abs(a.vel.x), std::abs(a.vel.y), 1e-300});
  return rel_close(a.alpha1, b.alpha1, tol) && rel_close(a.rho1, b.rho1, tol) &&
         rel_close(a.rho2, b.rho2, tol) && vclose(a.vel.x, b.vel.x, vs) &&
         vclose(a.vel.y, b.vel.y, vs) && pclose(a.p1, b.p1, e1) && pclose(a.p2, b.p2, e2);
}
}  // namespace

TEST_CASE("var_name covers every slot") {
  for (std::size_t k = 0; k < kNumVars; ++k) CHECK(std::strcmp(var_name(k), "?") != 0);
}

TEST_CASE("to_primitive: water-air left state round trip") {
  const auto q = to_conserved(kWaterAirLeft, kWater, kIdeal);
  CHECK(prim_close(to_primitive(q, kWater, kIdeal), kWaterAirLeft, kWater, kIdeal, 1e-12));
}

TEST_CASE("to_primitive: zero velocity leaves energies purely internal") {
  const PrimitiveState w{0.4, 2.0, 0.5, {0.0, 0.0}, 3.0, 1.5};
  const auto q = to_conserved(w, kIdeal, kIdeal);
  CHECK(q[kMomX] == 0.0);
  CHECK(rel_close(q[kEnergy1] / q[kMass1], internal_energy(kIdeal, 2.0, 3.0), 1e-15));
  CHECK(rel_close(q[kEnergy2] / q[kMass2], internal_energy(kIdeal, 0.5, 1.5), 1e-15));
}

TEST_CASE("to_primitive: inadmissible states name the offending field") {
  auto q = to_conserved(PrimitiveState{0.5, 1.0, 1.0, {1.0, 0.0}, 1.0, 1.0}, kIdeal, kIdeal);
  struct Case {
    std::size_t slot;
    double value;
    const char* field;
  };
  for (const Case c : {Case{kAlpha1, 1.0, "alpha1"}, Case{kAlpha1, 0.0, "alpha1"},
                       Case{kMass1, -1.0, "alpha1_rho1"}, Case{kMass2, 0.0, "alpha2_rho2"},
                       Case{kEnergy1, 0.0, "p1"}, Case{kEnergy2, 0.1, "p2"}}) {
    auto bad = q;
    bad[c.slot] = c.value;
    ResolvedState r;
    const char* field = nullptr;
    CHECK_FALSE(try_resolve(bad, kIdeal, kIdeal, r, &field));
    CHECK(std::string(field) == c.field);
    try {
      to_primitive(bad, kIdeal, kIdeal);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InadmissibleState);
      CHECK(std::string(e.what()).find(c.field) != std::string::npos);
    }
  }
}

TEST_CASE("to_conserved: inadmissible primitive raises") {
  CHECK_THROWS_AS(to_conserved(PrimitiveState{1.0, 1.0, 1.0, {}, 1.0, 1.0}, kIdeal, kIdeal), Error);
  CHECK_THROWS_AS(to_conserved(PrimitiveState{0.5, -1.0, 1.0, {}, 1.0, 1.0}, kIdeal, kIdeal),
                  Error);
  CHECK_THROWS_AS(to_conserved(PrimitiveState{0.5, 1.0, 1.0, {}, -6e8, 1.0}, kWater, kIdeal),
                  Error);
}

TEST_CASE("frozen sound speed") {
  // golden_values.py: water-air left cf
  CHECK(rel_close(frozen_sound_speed(kWaterAirLeft, kWater, kIdeal), 2653.3000947803462, 1e-13));
  // equal phasic speeds
  const PrimitiveState w{0.3, 1.0, 1.0, {}, 1.0, 1.0};
  CHECK(rel_close(frozen_sound_speed(w, kIdeal, kIdeal), std::sqrt(1.4), 1e-15));
  // single-phase limit
  const PrimitiveState almost{1.0 - 1e-12, 1000.0, 1.0, {}, 1e9, 1e5};
  CHECK(rel_close(frozen_sound_speed(almost, kWater, kIdeal), sound_speed(kWater, 1000.0, 1e9),
                  1e-9));
}

TEST_CASE("wood sound speed") {
  const PrimitiveState same{0.3, 1.0, 1.0, {}, 1.0, 1.0};
  CHECK(rel_close(wood_sound_speed(same, kIdeal, kIdeal), std::sqrt(1.4), 1e-14));
  const PrimitiveState almost{1.0 - 1e-12, 1000.0, 1000.0, {}, 1e9, 1e9};
  CHECK(rel_close(wood_sound_speed(almost, kWater, kIdeal), sound_speed(kWater, 1000.0, 1e9),
                  1e-6));
}

TEST_CASE("property: round trip on randomized admissible states") {
  sixeq::testing::Sampler s(21);
  for (int n = 0; n < 10000; ++n) {
    const EosParams e1 = s.eos(n % 3 == 0);
    const EosParams e2 = s.eos(n % 5 == 0);
    const PrimitiveState w = s.primitive(e1, e2, n % 2 == 0);
    const PrimitiveState back = to_primitive(to_conserved(w, e1, e2), e1, e2);
    REQUIRE(prim_close(back, w, e1, e2, 1e-12));
  }
}

TEST_CASE("property: mixture diagnostics identities") {
  sixeq::testing::Sampler s(22);
  for (int n = 0; n < 10000; ++n) {
    const EosParams e1 = s.eos(n % 2 == 0);
    const EosParams e2 = s.eos(n % 3 == 0);
    const PrimitiveState w = s.primitive(e1, e2, true);
    const auto q = to_conserved(w, e1, e2);
    const auto d = mixture_diagnostics(q, e1, e2);
    REQUIRE(d.rho == q[kMass1] + q[kMass2]);
    REQUIRE(d.Y1 > 0.0);
    REQUIRE(d.Y1 < 1.0);
    const auto r = resolve(q, e1, e2);
    REQUIRE(d.pbar == r.w.alpha1 * r.w.p1 + (1.0 - r.w.alpha1) * r.w.p2);
    REQUIRE(rel_close(d.E_mix * d.rho, q[kEnergy1] + q[kEnergy2], 1e-12));
    // Wood speed is sub-frozen, strictly when the phases differ
    REQUIRE(d.c_wood <= d.c_frozen * (1.0 + 1e-14));
    const double c1 = sound_speed(e1, w.rho1, w.p1), c2 = sound_speed(e2, w.rho2, w.p2);
    const double z1 = w.rho1 * c1 * c1, z2 = w.rho2 * c2 * c2;
    if (std::abs(c1 - c2) > 1e-6 * c1 && std::abs(z1 - z2) > 1e-6 * z1) {
      REQUIRE(d.c_wood < d.c_frozen);
    }
  }
}
