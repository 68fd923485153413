#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "oft/errors.hpp"
#include "oft/field_io.hpp"
#include "oft/schedule.hpp"
#include "support/oracles.hpp"

using namespace oft;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("oft_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(bool(in));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& p, const std::string& data) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(data.data(), std::streamsize(data.size()));
}

ComplexField sample_field() {
    Grid g = Grid::make2(-1.0, 1.0, 4, 0.0, 2.0, 3);
    ComplexField f(g);
    f[0] = Complex(0.0, -0.0); // negative zero must survive
    f[1] = Complex(1.0 / 3.0, -2.0e-308);
    f[2] = Complex(1.7976931348623157e308, 5.0e-324);
    for (std::size_t i = 3; i < f.size(); ++i)
        f[i] = Complex(std::sin(double(i)) * 1e-3, std::cos(double(i)) * 7.0);
    return f;
}

} // namespace

TEST_CASE("binary container round-trips bit for bit") {
    TempDir tmp;
    ComplexField f = sample_field();
    std::string p = tmp.file("field.oftf");
    write_oftf(p, f);
    ComplexField back = read_oftf(p);
    CHECK(back.grid == f.grid);
    REQUIRE(back.size() == f.size());
    CHECK(std::memcmp(back.values.data(), f.values.data(), f.size() * sizeof(Complex)) == 0);
    CHECK(oracle::hash_field(back) == oracle::hash_field(f));

    // 12-byte header, two 24-byte axis blocks, 16 bytes per sample
    CHECK(fs::file_size(p) == 12 + 2 * 24 + 16 * f.size());
}

TEST_CASE("corrupted containers report the failing byte") {
    using doctest::Contains;
    TempDir tmp;
    ComplexField f = sample_field();
    std::string good_path = tmp.file("good.oftf");
    write_oftf(good_path, f);
    std::string good = slurp(good_path);
    std::string p = tmp.file("bad.oftf");

    spill(p, "OF");
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains("unexpected end of file at byte 0"), IoError);

    std::string bad = good;
    bad[0] = 'X';
    spill(p, bad);
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains("bad magic at byte 0"), IoError);

    bad = good;
    bad[4] = 9; // version little-endian low byte
    spill(p, bad);
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains("unsupported OFTF version 9 at byte 4"), IoError);

    bad = good;
    bad[8] = 7;
    spill(p, bad);
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains("bad dimension 7 at byte 8"), IoError);

    // swap the first axis bounds: lower sits at byte 20, upper at byte 28
    bad = good;
    for (int i = 0; i < 8; ++i) std::swap(bad[std::size_t(20 + i)], bad[std::size_t(28 + i)]);
    spill(p, bad);
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains("bounds out of order at byte 20"), IoError);

    bad = good.substr(0, good.size() - 5);
    spill(p, bad);
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains("unexpected end of file"), IoError);

    bad = good + "zz";
    spill(p, bad);
    std::string trailing_msg =
        "trailing bytes after sample data at byte " + std::to_string(good.size());
    CHECK_THROWS_WITH_AS(read_oftf(p), Contains(trailing_msg.c_str()), IoError);

    CHECK_THROWS_AS(read_oftf(tmp.file("never_written.oftf")), IoError);
    CHECK_THROWS_AS(write_oftf("/nonexistent_dir_zz/f.oftf", f), IoError);
}

TEST_CASE("csv export layouts") {
    TempDir tmp;

    Grid g1 = Grid::make1(0.0, 1.0, 3);
    ComplexField f1(g1);
    f1[0] = Complex(1.0, -2.0);
    f1[1] = Complex(0.5, 0.25);
    f1[2] = Complex(-1.0, 0.0);
    std::string p1 = tmp.file("f1.csv");
    write_field_csv(p1, f1);
    CHECK(slurp(p1) == "x,re,im\n0,1,-2\n0.5,0.5,0.25\n1,-1,0\n");

    Grid g2 = Grid::make2(0.0, 1.0, 3, 0.0, 1.0, 3);
    ComplexField f2(g2);
    for (std::size_t i = 0; i < f2.size(); ++i) f2[i] = Complex(double(i), 0.0);
    std::string p2 = tmp.file("f2.csv");
    write_field_csv(p2, f2);
    std::string text = slurp(p2);
    CHECK(text.substr(0, 10) == "x,y,re,im\n");
    // row-major in y: the second data line advances x with y pinned
    CHECK(text.find("\n0.5,0,1,0\n") != std::string::npos);
    CHECK(text.find("\n0,0.5,3,0\n") != std::string::npos);

    ComplexField f3(Grid::make3({0, 0, 0}, {1, 1, 1}, {3, 3, 3}));
    CHECK_THROWS_AS(write_field_csv(tmp.file("f3.csv"), f3), IoError);
}

TEST_CASE("weight dump carries one row per node") {
    TempDir tmp;
    TimeStepSchedule s = build_schedule(1e-2, 1e-1, 1.0);
    QuadratureWeights q = composite_weights(s);
    std::string p = tmp.file("w.csv");
    write_weights_csv(p, q);
    std::string text = slurp(p);
    CHECK(text.rfind("n,t_n,re,im\n", 0) == 0);
    std::size_t rows = 0;
    for (char c : text)
        if (c == '\n') ++rows;
    CHECK(rows == q.omega.size() + 1);
    CHECK(text.find("\n0,0,") == text.find('\n')); // node 0 at t = 0 on the first data row
}
