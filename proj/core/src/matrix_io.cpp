#include "schatten/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schatten {
namespace {

void format_value(char (&buf)[40], double v) { std::snprintf(buf, sizeof(buf), "%.17g", v); }

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file for reading: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("cannot open file for writing: " + path);
    return out;
}

} // namespace

void write_dense_csv(std::ostream& out, const SymmetricMatrix& m) {
    const int d = m.dim();
    out << d << '\n';
    char buf[40];
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            format_value(buf, m(i, j));
            out << buf << (j + 1 < d ? "," : "\n");
        }
    }
}

SymmetricMatrix read_dense_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail("dense csv: missing dimension header");
    const int d = std::stoi(line);
    if (d < 1) fail("dense csv: dimension must be >= 1");
    Matrix dense(d, d);
    for (int i = 0; i < d; ++i) {
        if (!std::getline(in, line)) fail("dense csv: missing row " + std::to_string(i));
        std::stringstream row(line);
        std::string cell;
        for (int j = 0; j < d; ++j) {
            if (!std::getline(row, cell, ',')) fail("dense csv: short row " + std::to_string(i));
            dense(i, j) = std::stod(cell);
        }
    }
    return SymmetricMatrix::from_symmetric(dense);
}

void write_dense_csv_file(const std::string& path, const SymmetricMatrix& m) {
    auto out = open_out(path);
    write_dense_csv(out, m);
}

SymmetricMatrix read_dense_csv_file(const std::string& path) {
    auto in = open_in(path);
    return read_dense_csv(in);
}

void write_triplets(std::ostream& out, const SampledMatrix& s) {
    char buf[40];
    for (const auto& e : s.entries()) {
        format_value(buf, e.value);
        out << e.i << ' ' << e.j << ' ' << buf << '\n';
    }
}

SampledMatrix read_triplets(std::istream& in, int dim, bool values_required) {
    SampledMatrix s(dim);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::stringstream row(line);
        int i, j;
        if (!(row >> i >> j)) fail("triplets: bad line " + std::to_string(lineno));
        double value = 1.0;
        if (!(row >> value) && values_required)
            fail("triplets: missing value on line " + std::to_string(lineno));
        if (i > j) fail("triplets: expected i <= j on line " + std::to_string(lineno));
        s.add(i, j, value);
    }
    return s;
}

void write_triplets_file(const std::string& path, const SampledMatrix& s) {
    auto out = open_out(path);
    write_triplets(out, s);
}

SampledMatrix read_triplets_file(const std::string& path, int dim, bool values_required) {
    auto in = open_in(path);
    return read_triplets(in, dim, values_required);
}

} // namespace schatten
