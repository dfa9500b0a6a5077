#include <catch_amalgamated.hpp>

#include <cmath>

#include "lmg_otto/sweep.hpp"
#include "oracles.hpp"

using namespace lmg_otto;
using Catch::Approx;

namespace {

const BathPair fig1_baths{1.0, 0.5};
const BathPair low_baths{0.15, 0.1};

double work_at(const SweepSpec& spec, double x) {
  return run_protocol(with_axis(spec.protocol, spec.axis, x), spec.baths).work;
}

}  // namespace

TEST_CASE("grid points") {
  const auto closed = grid_points({0.0, 1.0}, 5);
  CHECK(closed == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto open = grid_points({0.0, 1.0, true}, 4);
  CHECK(open == std::vector<double>{0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS(grid_points({0.0, 1.0}, 1), Error);
  CHECK_THROWS_AS(grid_points({1.0, 1.0}, 3), Error);
}

TEST_CASE("with_axis rejects axes that do not belong to the protocol") {
  CHECK_THROWS_AS(with_axis(FieldSweep{}, Axis::r, 1.0), Error);
  CHECK_THROWS_AS(with_axis(CouplingSweep{}, Axis::h2, 1.0), Error);
  CHECK_THROWS_AS(with_axis(Proportional{}, Axis::J, 1.0), Error);
  const auto p = std::get<CouplingSweep>(with_axis(CouplingSweep{}, Axis::J2, 3.0));
  CHECK(p.J2 == 3.0);
  CHECK(parse_axis("h2") == Axis::h2);
  CHECK_FALSE(parse_axis("T1"));
}

TEST_CASE("sweep1d: near J = 0 the Fig. 1 cycle starts from the PWC boundary") {
  // J = 0 is the exact null. W grows like J^2 from there, so J = 1e-4 is
  // already a (tiny) engine for gamma = 0; the density-matrix oracle agrees.
  const SweepSpec spec{FieldSweep{0.0, 0.0, 0.5, 0.25}, Axis::J, {0.0, 0.0001}, 2, fig1_baths};
  const SweepResult r = sweep1d(spec);
  REQUIRE(r.rows.size() == 2);
  REQUIRE(r.rows[0].result);
  REQUIRE(r.rows[1].result);
  CHECK(r.rows[0].result->regime == Regime::null);
  const auto ref = oracle::otto_density_matrix({1e-4, 0.0, 0.5}, {1e-4, 0.0, 0.25}, 1.0, 0.5);
  CHECK(ref.work > 1e-10);
  CHECK(r.rows[1].result->work == Approx(ref.work).epsilon(1e-4));
  CHECK(r.rows[1].result->regime == Regime::engine);
  // past the Fig. 1 cutoff the same point is not an engine
  const SweepSpec off{FieldSweep{0.0, 0.5, 0.5, 0.25}, Axis::J, {0.0, 0.0001}, 2, fig1_baths};
  for (const auto& row : sweep1d(off).rows) CHECK(row.result->regime != Regime::engine);
}

TEST_CASE("sweep1d: reference point via h2 axis") {
  const SweepSpec spec{FieldSweep{1.0, 0.0, 0.5, 0.0}, Axis::h2, {0.25, 0.5}, 2, fig1_baths};
  const SweepResult r = sweep1d(spec);
  CHECK(r.rows[0].x == 0.25);
  CHECK(r.rows[0].result->work == Approx(0.0108554117691617513).margin(1e-14));
}

TEST_CASE("sweep1d: r -> -r symmetry and the uncoupled value") {
  const SweepSpec spec{Proportional{0.0, -1.0, 0.5, 0.3}, Axis::r, {-5.0, 5.0}, 11, fig1_baths};
  const SweepResult r = sweep1d(spec);
  REQUIRE(r.rows.size() == 11);
  CHECK(r.rows[5].x == 0.0);
  CHECK(r.rows[5].result->work == Approx(0.00927879000957635531).margin(1e-15));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(r.rows[i].x == -r.rows[10 - i].x);
    CHECK(r.rows[i].result->work == Approx(r.rows[10 - i].result->work).margin(1e-9));
  }
}

TEST_CASE("sweep1d: bad points become row errors") {
  // h2 < 0 is invalid for half of this range
  const SweepSpec spec{FieldSweep{1.0, 0.0, 0.5, 0.0}, Axis::h2, {-1.0, 1.0}, 5, fig1_baths};
  const SweepResult r = sweep1d(spec);
  REQUIRE(r.rows.size() == 5);
  CHECK_FALSE(r.rows[0].result);
  CHECK_FALSE(r.rows[0].error.empty());
  CHECK(r.rows[4].result);
}

TEST_CASE("sweep1d: parallel and sequential rows are bit-identical") {
  const SweepSpec spec{FieldSweep{0.0, -0.5, 0.5, 0.25}, Axis::J, {0.0, 5.0}, 997, fig1_baths};
  const SweepResult a = sweep1d(spec, Execution::sequential);
  const SweepResult b = sweep1d(spec, Execution::parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].x == b.rows[i].x);
    CHECK(a.rows[i].result->work == b.rows[i].result->work);
    CHECK(a.rows[i].result->q_hot == b.rows[i].result->q_hot);
    CHECK(a.rows[i].result->efficiency == b.rows[i].result->efficiency);
  }
}

TEST_CASE("maximize: work has an interior maximum in J") {
  const SweepSpec spec{FieldSweep{0.0, -1.0, 0.5, 0.25}, Axis::J, {0.0, 5.0}, 401, fig1_baths};
  const MaxReport m = maximize(spec, Objective::work);
  CHECK(m.refined);
  CHECK(m.value > 0.0);
  CHECK(m.arg > 0.0);
  CHECK(m.arg < 5.0);
  CHECK_FALSE(m.on_range_boundary);
  // value dominates the coarse grid
  for (const auto& row : sweep1d(spec).rows) CHECK(m.value >= objective_value(row, Objective::work));
  // and is a local maximum at 1e-6
  CHECK(m.value >= work_at(spec, m.arg - 1e-6));
  CHECK(m.value >= work_at(spec, m.arg + 1e-6));
}

TEST_CASE("maximize: efficiency in case (ii) peaks as h -> 0") {
  const SweepSpec spec{CouplingSweep{0.0, 0.0, 2.0, 1.0}, Axis::h, {0.0, 2.0, true}, 401,
                       fig1_baths};
  const MaxReport m = maximize(spec, Objective::efficiency);
  const auto xs = grid_points(spec.range, spec.steps);
  CHECK(m.arg <= xs[1]);
  CHECK(m.on_range_boundary);
  CHECK(m.value <= 0.5);
}

TEST_CASE("maximize: no engine point") {
  const SweepSpec spec{FieldSweep{0.0, -0.5, 0.1, 0.0}, Axis::h2, {0.1, 2.0, true}, 101,
                       low_baths};
  try {
    (void)maximize(spec, Objective::work);
    FAIL("expected no-engine-point error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_engine_point);
  }
}

TEST_CASE("gamma profile: Fig. 1 maxima grow with anisotropy") {
  const SweepSpec inner{FieldSweep{0.0, 0.0, 0.5, 0.25}, Axis::J, {0.0, 5.0}, 401, fig1_baths};
  const auto profile = gamma_profile(inner, {-1.0, 0.25}, 6);
  REQUIRE(profile.size() == 6);
  for (std::size_t i = 1; i < profile.size(); ++i) {
    REQUIRE(profile[i].work);
    CHECK(profile[i - 1].work->value > profile[i].work->value);
    CHECK(profile[i - 1].efficiency->value > profile[i].efficiency->value);
  }
  // efficiencies near the Carnot bound at gamma = -1
  CHECK(profile[0].efficiency->value > 0.45);
  CHECK(profile[0].efficiency->value <= 0.5);
}

TEST_CASE("gamma profile: engine cutoff") {
  const SweepSpec inner{FieldSweep{0.0, 0.0, 0.5, 0.25}, Axis::J, {0.0, 5.0}, 401, fig1_baths};
  const auto profile = gamma_profile(inner, {0.3, 0.6}, 31);
  const auto cut = engine_cutoff(profile);
  REQUIRE(cut);
  CHECK(*cut > 0.4);
  CHECK(*cut < 0.5);
  for (const auto& row : profile) {
    CHECK(row.work.has_value() == (row.gamma < *cut));
    CHECK(row.efficiency.has_value() == row.work.has_value());
  }
}

TEST_CASE("operating window: case (i) with h2 > h1") {
  SweepSpec spec{FieldSweep{2.0, 0.4, 0.1, 0.0}, Axis::h2, {0.1, 2.0, true}, 401, low_baths};
  const Window w = operating_window(spec);
  REQUIRE(w.intervals.size() == 1);
  const auto& iv = w.intervals.front();
  CHECK(iv.lo == Approx(0.1).margin(1e-7));
  CHECK(iv.hi > 0.3);
  CHECK_FALSE(iv.lo_clipped);
  CHECK_FALSE(iv.hi_clipped);
  for (double edge : {iv.lo, iv.hi}) {
    CHECK(std::abs(work_at(spec, edge)) <= 1e-6);
  }
  // W changes sign across the upper edge at 1e-8
  CHECK(work_at(spec, iv.hi - 1e-8) > 0.0);
  CHECK(work_at(spec, iv.hi + 1e-8) < 0.0);

  spec.protocol = FieldSweep{2.0, -0.5, 0.1, 0.0};
  CHECK(operating_window(spec).empty());
}

TEST_CASE("operating window: case (ii) with J2 > J1") {
  SweepSpec spec{CouplingSweep{1.0, -0.6, 1.0, 0.0}, Axis::J2, {1.0, 4.0, true}, 401, low_baths};
  CHECK(operating_window(spec).empty());
  spec.protocol = CouplingSweep{1.0, 1.0, 1.0, 0.0};
  const Window w = operating_window(spec);
  REQUIRE_FALSE(w.empty());
  for (const auto& iv : w.intervals) {
    CHECK(iv.lo < iv.hi);
    if (!iv.lo_clipped) CHECK(std::abs(work_at(spec, iv.lo)) <= 1e-6);
    if (!iv.hi_clipped) CHECK(std::abs(work_at(spec, iv.hi)) <= 1e-6);
  }
}

TEST_CASE("operating window: clipped at a closed range end") {
  const SweepSpec spec{FieldSweep{0.0, -1.0, 0.5, 0.25}, Axis::J, {0.5, 1.0}, 51, fig1_baths};
  const Window w = operating_window(spec);
  REQUIRE(w.intervals.size() == 1);
  CHECK(w.intervals[0].lo_clipped);
  CHECK(w.intervals[0].lo == 0.5);
}
