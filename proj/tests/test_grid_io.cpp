#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>

#include "charcone/error.hpp"
#include "charcone/gfn_io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace charcone;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "charcone_io_test";
    fs::create_directories(dir);
    return dir / name;
}

GridFunction random_function(const Grid& g) {
    std::vector<cplx> v(g.size());
    for (auto& x : v) x = {uniform(-1, 1) * std::exp(uniform(-30, 30)), uniform(-1, 1)};
    return GridFunction(g, std::move(v));
}

bool bitwise_equal(const GridFunction& a, const GridFunction& b) {
    return a.grid() == b.grid() && a.size() == b.size() &&
           std::memcmp(a.values().data(), b.values().data(), a.size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST(Grid, NodesAreExactMirrors) {
    const AxisSpec c = AxisSpec::centered(0.1, 11);
    const AxisSpec h = AxisSpec::half_step(0.1, 12);
    EXPECT_EQ(c.node(5), 0.0);
    for (std::size_t j = 0; j < 11; ++j) EXPECT_EQ(c.node(j), -c.node(10 - j));
    for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(h.node(j), -h.node(11 - j));
    EXPECT_DOUBLE_EQ(h.node(6), 0.05);
}

TEST(Grid, LightConeMomentumNeedsHalfStep) {
    const ModelParams P = ModelParams::make(1.0, 2);
    EXPECT_THROW(make_grid(P, GridKind::lc_momentum, {AxisSpec::centered(0.1, 8), AxisSpec::centered(0.1, 8)}),
                 DomainError);
    EXPECT_NO_THROW(make_grid(P, GridKind::lc_momentum, {AxisSpec::half_step(0.1, 8), AxisSpec::centered(0.1, 8)}));
    EXPECT_THROW(AxisSpec::half_step(0.1, 7), DomainError);
}

TEST(GridIo, GfnRoundTripIsBitwise) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(0.75, n);
        for (GridKind k : {GridKind::minkowski_momentum, GridKind::lc_momentum, GridKind::minkowski_position,
                           GridKind::lc_position}) {
            const Grid g = uniform_grid(P, k, 6, 0.3);
            const GridFunction f = random_function(g);
            const auto path = scratch("rt.gfn");
            write_gfn(f, path);
            EXPECT_TRUE(bitwise_equal(read_gfn(path), f));
        }
    }
}

TEST(GridIo, CsvRoundTripIsBitwise) {
    const Grid g = uniform_grid(ModelParams::make(1.0, 2), GridKind::lc_momentum, 8, 0.125);
    const GridFunction f = random_function(g);
    const auto path = scratch("rt.csv");
    to_csv(f, path);
    EXPECT_TRUE(bitwise_equal(read_csv(path), f));
    std::ifstream in(path);
    std::string header, columns;
    std::getline(in, header);
    std::getline(in, columns);
    EXPECT_EQ(header.rfind("# {", 0), 0u);
    EXPECT_EQ(columns, "p_plus,p_perp1,re,im");
}

TEST(GridIo, FormatDouble) {
    EXPECT_EQ(format_double(1.0), "1.0");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-2.5e-7), "-2.5e-07");
    for (int i = 0; i < 1000; ++i) {
        const double v = uniform(-1, 1) * std::exp(uniform(-200, 200));
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(GridIo, TruncatedPayload) {
    const Grid g = uniform_grid(ModelParams::make(1.0, 1), GridKind::minkowski_momentum, 16, 0.5);
    const auto path = scratch("short.gfn");
    write_gfn(random_function(g), path);
    fs::resize_file(path, fs::file_size(path) - 16);
    try {
        read_gfn(path);
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("payload length mismatch: expected 256 bytes, found 240"), std::string::npos)
            << e.what();
    }
}

TEST(GridIo, HeaderErrors) {
    const auto path = scratch("bad.gfn");
    {
        std::ofstream o(path, std::ios::binary);
        o << "GFN2\n{}\n";
    }
    EXPECT_THROW(read_gfn(path), FormatError);
    {
        std::ofstream o(path, std::ios::binary);
        o << "GFN1\n{\"version\":2,\"kind\":\"lc-momentum\",\"m\":1.0,\"n\":1,\"axes\":[]}\n";
    }
    try {
        read_gfn(path);
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("version"), std::string::npos);
    }
    EXPECT_THROW(read_gfn(scratch("does_not_exist.gfn")), IoError);
}

TEST(GridIo, InvalidGridInHeader) {
    nlohmann::json j = grid_to_json(uniform_grid(ModelParams::make(1.0, 1), GridKind::minkowski_momentum, 8, 0.5));
    j["kind"] = "lc-momentum";
    EXPECT_THROW(grid_from_json(j), FormatError);
    j = grid_to_json(uniform_grid(ModelParams::make(1.0, 1), GridKind::minkowski_momentum, 8, 0.5));
    j.erase("axes");
    try {
        grid_from_json(j);
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("axes"), std::string::npos);
    }
}

TEST(GridIo, AxisNames) {
    EXPECT_EQ(axis_name(GridKind::minkowski_momentum, 1, 3), "p2");
    EXPECT_EQ(axis_name(GridKind::lc_momentum, 0, 3), "p_plus");
    EXPECT_EQ(axis_name(GridKind::lc_position, 0, 2), "x_minus");
}
