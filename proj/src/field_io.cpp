#include "oft/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "oft/errors.hpp"

namespace oft {

namespace {

constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(char((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double v) { put_u64(buf, std::bit_cast<std::uint64_t>(v)); }

struct Cursor {
    const std::string& data;
    std::size_t pos = 0;

    void need(std::size_t n, const char* what) {
        if (pos + n > data.size())
            throw IoError(std::string("unexpected end of file at byte ") + std::to_string(pos) +
                          " while reading " + what);
    }
    std::uint32_t u32(const char* what) {
        need(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(data[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    std::uint64_t u64(const char* what) {
        need(8, what);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(std::uint8_t(data[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    double f64(const char* what) { return std::bit_cast<double>(u64(what)); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return data;
}

void spill(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(data.data(), std::streamsize(data.size()));
    out.flush();
    if (!out) throw IoError("write failure on '" + path + "'");
}

} // namespace

void write_oftf(const std::string& path, const ComplexField& field) {
    std::string buf;
    buf.reserve(16 + 24 * std::size_t(field.grid.dim) + 16 * field.size());
    buf.append("OFTF", 4);
    put_u32(buf, kVersion);
    put_u32(buf, std::uint32_t(field.grid.dim));
    for (int a = 0; a < field.grid.dim; ++a) {
        put_u64(buf, field.grid.n[a]);
        put_f64(buf, field.grid.lower[a]);
        put_f64(buf, field.grid.upper[a]);
    }
    for (const Complex& z : field.values) {
        put_f64(buf, z.real());
        put_f64(buf, z.imag());
    }
    spill(path, buf);
}

ComplexField read_oftf(const std::string& path) {
    std::string data = slurp(path);
    Cursor cur{data};
    cur.need(4, "magic");
    if (std::memcmp(data.data(), "OFTF", 4) != 0) throw IoError("bad magic at byte 0: not an OFTF file");
    cur.pos = 4;
    std::uint32_t version = cur.u32("version");
    if (version != kVersion)
        throw IoError("unsupported OFTF version " + std::to_string(version) + " at byte 4");
    std::uint32_t dim = cur.u32("dimension");
    if (dim < 1 || dim > 3)
        throw IoError("bad dimension " + std::to_string(dim) + " at byte 8");

    Grid grid;
    grid.dim = int(dim);
    for (std::uint32_t a = 0; a < dim; ++a) {
        std::uint64_t n = cur.u64("axis point count");
        if (n < 1 || n > (std::uint64_t(1) << 40))
            throw IoError("bad point count on axis " + std::to_string(a) + " at byte " +
                          std::to_string(cur.pos - 8));
        grid.n[a] = std::size_t(n);
        grid.lower[a] = cur.f64("axis lower bound");
        grid.upper[a] = cur.f64("axis upper bound");
        if (!(grid.lower[a] < grid.upper[a]))
            throw IoError("axis " + std::to_string(a) + " bounds out of order at byte " +
                          std::to_string(cur.pos - 16));
    }
    ComplexField field(grid);
    for (std::size_t i = 0; i < field.size(); ++i) {
        double re = cur.f64("sample");
        double im = cur.f64("sample");
        field.values[i] = Complex(re, im);
    }
    if (cur.pos != data.size())
        throw IoError("trailing bytes after sample data at byte " + std::to_string(cur.pos));
    return field;
}

void write_field_csv(const std::string& path, const ComplexField& field) {
    const Grid& g = field.grid;
    if (g.dim > 2) throw IoError("csv export covers 1D and 2D fields only");
    std::string buf;
    buf.reserve(64 * field.size());
    char line[160];
    if (g.dim == 1) {
        buf += "x,re,im\n";
        for (std::size_t i = 0; i < g.n[0]; ++i) {
            const Complex& z = field.values[i];
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", g.coordinate(0, i), z.real(),
                          z.imag());
            buf += line;
        }
    } else {
        buf += "x,y,re,im\n";
        for (std::size_t j = 0; j < g.n[1]; ++j)
            for (std::size_t i = 0; i < g.n[0]; ++i) {
                const Complex& z = field.values[i + g.n[0] * j];
                std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", g.coordinate(0, i),
                              g.coordinate(1, j), z.real(), z.imag());
                buf += line;
            }
    }
    spill(path, buf);
}

void write_weights_csv(const std::string& path, const QuadratureWeights& weights) {
    std::string buf = "n,t_n,re,im\n";
    char line[160];
    for (std::size_t n = 0; n < weights.omega.size(); ++n) {
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", n, weights.schedule.nodes[n],
                      weights.omega[n].real(), weights.omega[n].imag());
        buf += line;
    }
    spill(path, buf);
}

} // namespace oft
