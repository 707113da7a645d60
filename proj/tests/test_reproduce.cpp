#include <catch_amalgamated.hpp>

#include <numbers>

#include "reference_data.hpp"
#include "test_support.hpp"

using namespace polarzeros;
using Catch::Approx;

TEST_CASE("presets expand to their parameter sets", "[reproduce]")
{
    const RunConfig t1 = preset_config("table1");
    CHECK(t1.k == 1);
    CHECK(std::abs(t1.xi - std::polar(1.0 / 3.0, std::numbers::pi / 3)) <= 1e-16);
    REQUIRE(t1.measure.get_if<BernsteinSzego>() != nullptr);
    CHECK(std::abs(t1.measure.get_if<BernsteinSzego>()->beta - Complex(0.25, 0.4330127018922193)) <= 1e-15);
    CHECK(t1.degrees == degree_range(2, 20));
    CHECK(preset_config("table2").k == 2);

    const RunConfig t3 = preset_config("table3");
    REQUIRE(t3.measure.get_if<MassPoint>() != nullptr);
    CHECK(t3.measure.get_if<MassPoint>()->mass == Approx(2.0 / 3.0));
    CHECK(t3.xi == Complex(1.0 / 3.0));
    CHECK(preset_config("table4").xi == Complex(4.0 / 3.0));

    CHECK(preset_config("fig1", Panel::right).k == 2);
    CHECK(preset_config("fig2", Panel::right).xi == Complex(4.0 / 3.0));
    CHECK(preset_config("fig2").degrees == std::vector<int>{10, 20, 30, 40});
    CHECK_THROWS_AS(preset_config("table5"), InvalidArgument);
}

TEST_CASE("reproduce_sendov_table", "[reproduce]")
{
    RunConfig cfg = preset_config("table1");
    const auto rows = reproduce_sendov_table(cfg);
    REQUIRE(rows.size() == 19);
    CHECK(rows.back().n == 20);
    CHECK(rows.back().distance == Approx(0.82332).margin(1e-3));

    cfg = preset_config("table2");
    cfg.degrees = {2};
    CHECK(reproduce_sendov_table(cfg)[0].distance == Approx(0.5528).margin(1e-3));

    cfg = preset_config("table3");
    cfg.degrees = {2};
    CHECK(reproduce_sendov_table(cfg)[0].distance == Approx(0.9440).margin(1e-3));

    cfg.degrees = {1};
    CHECK_THROWS_AS(reproduce_sendov_table(cfg), InvalidArgument);
    cfg.degrees = {65};
    CHECK_THROWS_AS(reproduce_sendov_table(cfg), InvalidArgument);
    cfg.degrees = {};
    CHECK_THROWS_AS(reproduce_sendov_table(cfg), InvalidArgument);
}

TEST_CASE("nearest metric gives the classical distance", "[reproduce]")
{
    RunConfig cfg = preset_config("table1");
    cfg.metric = DistanceMetric::nearest;
    const auto near = reproduce_sendov_table(cfg);
    cfg.metric = DistanceMetric::farthest;
    const auto far = reproduce_sendov_table(cfg);
    for (std::size_t i = 0; i < near.size(); ++i)
        CHECK(near[i].distance <= far[i].distance + 1e-15);
    // with a single critical point the two metrics coincide
    CHECK(near[0].distance == Approx(far[0].distance).margin(1e-15));
}

TEST_CASE("root-finder failure names the degree", "[reproduce]")
{
    RunConfig cfg = preset_config("table1");
    cfg.degrees = {12};
    cfg.max_iter = 1;
    try {
        (void)reproduce_sendov_table(cfg);
        FAIL("expected RootFinderError");
    } catch (const RootFinderError& e) {
        CHECK(std::string(e.what()).find("n = 12") != std::string::npos);
    }
}

TEST_CASE("zero_scatter_dataset", "[reproduce]")
{
    RunConfig cfg = preset_config("fig2");
    cfg.degrees = {10};
    const auto left = zero_scatter_dataset(cfg);
    REQUIRE(left.size() == 1);
    CHECK(testing_support::matched_max_error({Complex(-1.0005, 0.0), Complex(1.1433, 0.0)}, left[0].roots.roots) <=
          5e-4);

    cfg = preset_config("fig2", Panel::right);
    cfg.degrees = {10};
    const auto right = zero_scatter_dataset(cfg);
    CHECK(testing_support::matched_max_error({Complex(0.51981, 1.1448), Complex(0.51981, -1.1448)},
                                             right[0].roots.roots) <= 5e-4);

    const Complex beta{0.1, -0.4};
    const Complex xi{0.7, 0.2};
    RunConfig one;
    one.measure = MeasureSpec::bernstein_szego(beta);
    one.xi = xi;
    one.degrees = {1};
    const auto lin = zero_scatter_dataset(one);
    REQUIRE(lin[0].roots.roots.size() == 1);
    CHECK(std::abs(lin[0].roots.roots[0] + (xi + 2.0 * beta)) <= 1e-15);
}

TEST_CASE("CSV and SVG renderings are deterministic", "[reproduce]")
{
    RunConfig cfg = preset_config("table3");
    cfg.degrees = {2, 3};
    const std::string csv = sendov_csv(reproduce_sendov_table(cfg));
    CHECK(csv.rfind("n,zero_re,zero_im,distance\n2,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv == sendov_csv(reproduce_sendov_table(cfg)));

    RunConfig fig = preset_config("fig1");
    fig.degrees = {10, 20};
    const auto data = zero_scatter_dataset(fig);
    const std::string scatter = scatter_csv(data);
    CHECK(scatter.rfind("degree,re,im\n10,", 0) == 0);
    CHECK(std::count(scatter.begin(), scatter.end(), '\n') == 31);
    const std::string svg = scatter_svg(fig, data);
    CHECK(svg == scatter_svg(fig, zero_scatter_dataset(fig)));
    CHECK(svg.find("class=\"guide\"") != std::string::npos);
}

TEST_CASE("every plotted root lies in the polar disk", "[reproduce][property]")
{
    for (const char* name : {"fig1", "fig2"})
        for (Panel panel : {Panel::left, Panel::right}) {
            const RunConfig cfg = preset_config(name, panel);
            for (const ScatterEntry& e : zero_scatter_dataset(cfg))
                CHECK(containment_report(e.roots, cfg.xi, cfg.k).all_inside);
        }
}
