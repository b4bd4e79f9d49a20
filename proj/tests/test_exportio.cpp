// SPDX-License-Identifier: Apache-2.0
//
// rcsr-toolkit: modulated metasurfaces for wideband radar cross section reduction
// Copyright (C) 2026 rcsr-toolkit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include <rcsr/errors.hpp>
#include <rcsr/exportio.hpp>
#include <rcsr/layout.hpp>

#include "test_util.hpp"

using namespace rcsr;
using nlohmann::json;

namespace {

// Run `fn`, require it throws E whose message contains `needle`.
template <typename E, typename Fn>
void check_throws_contains(Fn &&fn, const std::string &needle) {
    try {
        fn();
        FAIL_CHECK("expected an exception mentioning '" << needle << "'");
    } catch (const E &e) {
        const std::string what = e.what();
        if (what.find(needle) == std::string::npos)
            FAIL_CHECK("message '" << what << "' does not mention '" << needle << "'");
    }
}

PhaseTable analytic_table() {
    const AnalyticProvider provider(testutil::reference_palette());
    const FrequencyGrid grid;
    const IncidenceSpec inc{0.0, Polarization::TE};

    PhaseTable table;
    for (int t = 0; t < 7; ++t)
        table.type_ids.push_back(t);
    table.freqs_GHz = grid.frequencies();
    for (std::size_t t = 0; t < 7; ++t)
        for (int i = 0; i < grid.n_points; ++i)
            table.gamma.push_back(provider.gamma(t, grid.at(i), inc));
    return table;
}

SurfaceLayout small_layout() {
    const auto field = sinusoid_field(3, 4, 6.0, ModulationSpec{});
    return assign_types(field, 3, 4, WeightVector{{5, 7}}, testutil::two_type_palette());
}

} // namespace

TEST_CASE("phase table: write/read round trip") {
    testutil::TempDir dir;
    const auto path = dir.file("table.csv");

    const PhaseTable table = analytic_table();
    write_phase_table(table, path);
    const PhaseTable back = read_phase_table(path);

    REQUIRE(back.type_ids == table.type_ids);
    REQUIRE(back.freq_count() == table.freq_count());
    for (std::size_t i = 0; i < back.freq_count(); ++i)
        CHECK(back.freqs_GHz[i] ==
              doctest::Approx(table.freqs_GHz[i]).epsilon(1.0e-6));
    REQUIRE(back.gamma.size() == 7 * 251);
    // Six significant digits survive the text round trip.
    for (std::size_t i = 0; i < back.gamma.size(); ++i)
        CHECK(std::abs(back.gamma[i] - table.gamma[i]) < 1.0e-5);

    // Deterministic writer: a rewrite is byte-identical.
    const auto path2 = dir.file("table2.csv");
    write_phase_table(table, path2);
    CHECK(testutil::read_file(path) == testutil::read_file(path2));
}

TEST_CASE("phase table reader rejects malformed input with line numbers") {
    testutil::TempDir dir;
    const auto path = dir.file("bad.csv");

    SUBCASE("wrong header") {
        testutil::write_file(path, "type,freq,re,im\n0,10,1,0\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); },
            "line 1: header must be exactly 'type_id,freq_GHz,re,im'");
    }
    SUBCASE("passivity violation names the line") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n"
                                   "0,10,0.5,0\n"
                                   "0,11,0.6,0\n"
                                   "0,12,1.2,0\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); }, "line 4: passivity violation, |gamma| = 1.2");
    }
    SUBCASE("out of order rows") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n"
                                   "0,11,0.5,0\n"
                                   "0,10,0.5,0\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); },
            "line 3: rows must be sorted by (type_id, freq_GHz) ascending");
    }
    SUBCASE("duplicate frequency also counts as unsorted") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n"
                                   "0,10,0.5,0\n"
                                   "0,10,0.5,0\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); }, "line 3: rows must be sorted");
    }
    SUBCASE("ragged frequency grid names both types") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n"
                                   "0,10,0.5,0\n"
                                   "0,11,0.5,0\n"
                                   "5,10,0.5,0\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); },
            "type 5: ragged grid, frequency set differs from type 0");
    }
    SUBCASE("field count") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n0,10,0.5\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); }, "line 2: expected 4 fields, got 3");
    }
    SUBCASE("unparsable number") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n0,ten,0.5,0\n");
        check_throws_contains<validation_error>(
            [&] { read_phase_table(path); }, "line 2: cannot parse freq_GHz from 'ten'");
    }
    SUBCASE("interior blank row") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n0,10,0.5,0\n\n0,11,0.5,0\n");
        check_throws_contains<validation_error>([&] { read_phase_table(path); },
                                                "line 3: blank row");
    }
    SUBCASE("header only") {
        testutil::write_file(path, "type_id,freq_GHz,re,im\n");
        check_throws_contains<validation_error>([&] { read_phase_table(path); },
                                                "no data rows");
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_phase_table(dir.file("absent.csv")), io_error);
    }
}

TEST_CASE("phase table reader accepts CRLF and trailing blank lines") {
    testutil::TempDir dir;
    const auto path = dir.file("crlf.csv");
    testutil::write_file(path, "type_id,freq_GHz,re,im\r\n"
                               "0,10,0.5,0\r\n"
                               "0,11,-0.25,0.1\r\n"
                               "\r\n");
    const PhaseTable t = read_phase_table(path);
    CHECK(t.type_ids == std::vector<int>{0});
    CHECK(t.freqs_GHz == std::vector<double>{10.0, 11.0});
    CHECK(t.at(0, 1) == std::complex<double>(-0.25, 0.1));
}

TEST_CASE("spectrum csv format") {
    testutil::TempDir dir;
    const auto path = dir.file("spec.csv");

    RcsSpectrum spec;
    spec.points = {{10.0, -1.25}, {10.1, kRcsrFloorDb}, {35.0, -0.000123456789}};
    write_spectrum_csv(spec, path);
    const std::string text = testutil::read_file(path);
    CHECK(text == "freq_GHz,rcsr_dB\n10,-1.25\n10.1,-300\n35,-0.000123457\n");

    RcsSpectrum empty;
    const auto nofile = dir.file("empty.csv");
    check_throws_contains<validation_error>([&] { write_spectrum_csv(empty, nofile); },
                                            "refusing to write an empty spectrum");
    CHECK_FALSE(std::filesystem::exists(nofile));
}

TEST_CASE("pattern csv format") {
    testutil::TempDir dir;
    const auto path = dir.file("pat.csv");

    BistaticPattern pat;
    pat.points = {{-90.0, -12.5}, {0.0, 0.0}, {90.0, -47.25}};
    write_pattern_csv(pat, path);
    CHECK(testutil::read_file(path) == "theta_deg,level_dB\n-90,-12.5\n0,0\n90,-47.25\n");

    BistaticPattern empty;
    check_throws_contains<validation_error>(
        [&] { write_pattern_csv(empty, dir.file("e.csv")); },
        "refusing to write an empty pattern");
}

TEST_CASE("layout json round trip") {
    testutil::TempDir dir;
    const auto path = dir.file("layout.json");

    const SurfaceLayout layout = small_layout();
    write_layout_json(layout, path);
    const SurfaceLayout back = read_layout_json(path);

    CHECK(back.rows == layout.rows);
    CHECK(back.cols == layout.cols);
    CHECK(back.period_mm == layout.period_mm);
    CHECK(back.margin_mm == layout.margin_mm);
    CHECK(back.type_grid == layout.type_grid);
    REQUIRE(back.palette.size() == layout.palette.size());
    for (std::size_t i = 0; i < back.palette.size(); ++i) {
        CHECK(back.palette[i].gap_mm == layout.palette[i].gap_mm);
        CHECK(back.palette[i].eps_r == layout.palette[i].eps_r);
        CHECK(back.palette[i].thickness_mm == layout.palette[i].thickness_mm);
        CHECK(back.palette[i].tan_delta == layout.palette[i].tan_delta);
    }

    // The reader validates: corrupt the grid and expect a refusal.
    json j = json::parse(testutil::read_file(path));
    j["type_grid"][0][0] = 9;
    testutil::write_file(path, j.dump(2) + "\n");
    CHECK_THROWS_AS(read_layout_json(path), validation_error);

    testutil::write_file(path, "{not json");
    check_throws_contains<validation_error>([&] { read_layout_json(path); }, "invalid JSON");
}

TEST_CASE("layout svg: one square per cell plus the board") {
    testutil::TempDir dir;
    const auto path = dir.file("layout.svg");

    const auto field = sinusoid_field(40, 40, 6.0, ModulationSpec{});
    const WeightVector w{{104, 112, 164, 196, 412, 336, 276}};
    const auto layout = assign_types(field, 40, 40, w, testutil::reference_palette());
    write_layout_svg(layout, path);

    const std::string svg = testutil::read_file(path);
    CHECK(testutil::count_substr(svg, "<rect") == 1601);
    CHECK(testutil::count_substr(svg, "viewBox=\"0 0 250 250\"") == 1);
    // Largest and smallest patch edges appear.
    CHECK(testutil::count_substr(svg, "width=\"5.9\"") > 0);
    CHECK(testutil::count_substr(svg, "width=\"3.1\"") > 0);

    const auto path2 = dir.file("layout2.svg");
    write_layout_svg(layout, path2);
    CHECK(testutil::read_file(path) == testutil::read_file(path2));
}

TEST_CASE("band report json") {
    testutil::TempDir dir;
    const auto path = dir.file("bands.json");

    std::vector<Band> bands = {{11.3, 32.3}, {33.0, 34.0}};
    write_band_report_json(bands, -10.0, path);

    const json j = json::parse(testutil::read_file(path));
    CHECK(j.at("threshold_dB").get<double>() == -10.0);
    REQUIRE(j.at("bands").size() == 2);
    CHECK(j["bands"][0]["f_lo"].get<double>() == 11.3);
    CHECK(j["bands"][0]["f_hi"].get<double>() == 32.3);
    CHECK(j["bands"][0]["fractional_bw_percent"].get<double>() ==
          doctest::Approx(96.3303).epsilon(1.0e-4));
    CHECK(j["bands"][1]["fractional_bw_percent"].get<double>() ==
          doctest::Approx(2.98507).epsilon(1.0e-4));
}

TEST_CASE("ga report json carries config, result and history") {
    testutil::TempDir dir;
    const auto path = dir.file("ga.json");

    GaResult result;
    result.best = WeightVector{{3, 5}};
    result.best_fitness = -1.5;
    result.history = {{-1.0, -0.25}, {-1.5, -0.5}};
    GaConfig cfg;
    cfg.rng_seed = 99;

    write_ga_report_json(result, cfg, "minimax", -0.75, path);
    const json j = json::parse(testutil::read_file(path));
    CHECK(j.at("objective").get<std::string>() == "minimax");
    CHECK(j.at("seed").get<std::uint64_t>() == 99);
    CHECK(j.at("uniform_fitness").get<double>() == -0.75);
    CHECK(j.at("best_weights") == json::array({3, 5}));
    CHECK(j.at("best_fitness").get<double>() == -1.5);
    REQUIRE(j.at("history").size() == 2);
    CHECK(j["history"][1]["best"].get<double>() == -1.5);
    CHECK(j["history"][0]["mean"].get<double>() == -0.25);
    CHECK(j.at("config").at("population_size").get<int>() == cfg.population_size);
    CHECK(j.at("config").at("rng_seed").get<std::uint64_t>() == 99);
}

TEST_CASE("weights json accepts three shapes") {
    testutil::TempDir dir;
    const auto path = dir.file("w.json");

    testutil::write_file(path, "[104, 112, 164, 196, 412, 336, 276]\n");
    CHECK(read_weights_json(path).counts ==
          std::vector<int>{104, 112, 164, 196, 412, 336, 276});

    testutil::write_file(path, "{\"counts\": [800, 800]}\n");
    CHECK(read_weights_json(path).counts == std::vector<int>{800, 800});

    GaResult result;
    result.best = WeightVector{{10, 20, 30}};
    result.best_fitness = 0.0;
    write_ga_report_json(result, GaConfig{}, "bandwidth", 0.0, path);
    CHECK(read_weights_json(path).counts == std::vector<int>{10, 20, 30});

    testutil::write_file(path, "{\"weights\": [1, 2]}\n");
    check_throws_contains<validation_error>([&] { read_weights_json(path); },
                                            "expected a JSON array");

    testutil::write_file(path, "[1, -2]\n");
    CHECK_THROWS_AS(read_weights_json(path), validation_error);

    testutil::write_file(path, "[1, \"two\"]\n");
    check_throws_contains<validation_error>([&] { read_weights_json(path); },
                                            "weights JSON");
}

TEST_CASE("run manifest") {
    testutil::TempDir dir;
    const auto path = dir.file("manifest.json");

    RunManifest m;
    m.tool_version = "0.1.0";
    m.command = "rcsr rcs --mode mono";
    m.seed = 7;
    m.input_hashes["weights.json"] = "0123456789abcdef";
    m.config_echo_json = "{\"band\": [11.3, 32.3]}";
    m.timestamp_utc = "2026-08-19T00:00:00Z";
    m.artifacts = {"spectrum.csv", "band_report.json"};
    write_manifest(m, path);

    const json j = json::parse(testutil::read_file(path));
    CHECK(j.at("tool_version") == "0.1.0");
    CHECK(j.at("seed").get<std::uint64_t>() == 7);
    CHECK(j.at("input_hashes").at("weights.json") == "0123456789abcdef");
    CHECK(j.at("config").at("band")[1].get<double>() == 32.3);
    CHECK(j.at("artifacts").size() == 2);

    m.config_echo_json = "{broken";
    check_throws_contains<validation_error>([&] { write_manifest(m, path); },
                                            "manifest config echo is not valid JSON");
}

TEST_CASE("fnv1a-64 reference vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");

    testutil::TempDir dir;
    const auto path = dir.file("blob.bin");
    const std::string payload = "rcsr\n\x01\x02 payload";
    testutil::write_file(path, payload);
    CHECK(fnv1a_file_hex(path) == fnv1a_hex(payload));
    CHECK_THROWS_AS(fnv1a_file_hex(dir.file("missing.bin")), io_error);
}

TEST_CASE("writers report filesystem failures as io_error") {
    RcsSpectrum spec;
    spec.points = {{10.0, -1.0}};
    CHECK_THROWS_AS(write_spectrum_csv(spec, "/nonexistent-rcsr-dir/spec.csv"), io_error);
    CHECK_THROWS_AS(write_layout_json(small_layout(), "/nonexistent-rcsr-dir/l.json"),
                    io_error);
}
