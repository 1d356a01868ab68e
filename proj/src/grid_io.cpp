#include "ringcav/grid_io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>

#include "ringcav/errors.hpp"

namespace ringcav::io {

namespace {

void put_u64(std::ostream& os, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffU);
    os.write(b.data(), b.size());
}

void put_u32(std::ostream& os, std::uint32_t v) {
    std::array<char, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffU);
    os.write(b.data(), b.size());
}

void put_f64(std::ostream& os, double v) { put_u64(os, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(std::istream& is) {
    std::array<unsigned char, 8> b{};
    if (!is.read(reinterpret_cast<char*>(b.data()), b.size())) throw IoError("binary grid is truncated");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

std::uint32_t get_u32(std::istream& is) {
    std::array<unsigned char, 4> b{};
    if (!is.read(reinterpret_cast<char*>(b.data()), b.size())) throw IoError("binary grid is truncated");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

void put_header(std::ostream& os, std::string_view magic, std::uint64_t length, double time,
                std::uint64_t hash, std::uint32_t extra) {
    os.write(magic.data(), 4);
    put_u64(os, length);
    put_f64(os, time);
    put_u64(os, hash);
    put_u32(os, extra);
}

BinaryHeader get_header(std::istream& is, std::string_view expected) {
    BinaryHeader h;
    h.magic.resize(4);
    if (!is.read(h.magic.data(), 4)) throw IoError("binary grid is truncated");
    if (h.magic != expected)
        throw IoError("bad magic '" + h.magic + "', expected '" + std::string(expected) + "'");
    h.length = get_u64(is);
    h.time = get_f64(is);
    h.scenario_hash = get_u64(is);
    h.extra = get_u32(is);
    return h;
}

void check_stream(const std::ostream& os) {
    if (!os) throw IoError("write failed");
}

}  // namespace

void append_double(std::string& out, double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.append(buf.data(), res.ptr);
}

std::string format_double(double v) {
    std::string s;
    append_double(s, v);
    return s;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_density_binary(std::ostream& os, const RelativeDensityGrid& grid, std::uint64_t scenario_hash) {
    put_header(os, "RDG1", grid.size(), grid.time(), scenario_hash, 0);
    for (double x : grid.xs()) put_f64(os, x);
    const auto& v = grid.values();
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            put_f64(os, v(r, c).real());
            put_f64(os, v(r, c).imag());
        }
    }
    check_stream(os);
}

void write_wigner_binary(std::ostream& os, const WignerGrid& grid, std::uint64_t scenario_hash) {
    put_header(os, "WIG1", grid.xs.size(), grid.time, scenario_hash,
               static_cast<std::uint32_t>(grid.ps.size()));
    for (double x : grid.xs) put_f64(os, x);
    for (double p : grid.ps) put_f64(os, p);
    for (Eigen::Index c = 0; c < grid.values.cols(); ++c)
        for (Eigen::Index r = 0; r < grid.values.rows(); ++r) put_f64(os, grid.values(r, c));
    check_stream(os);
}

DensityFile read_density_binary(std::istream& is) {
    DensityFile f;
    f.header = get_header(is, "RDG1");
    const auto n = static_cast<Eigen::Index>(f.header.length);
    f.xs.resize(f.header.length);
    for (auto& x : f.xs) x = get_f64(is);
    f.values.resize(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double re = get_f64(is);
            const double im = get_f64(is);
            f.values(r, c) = {re, im};
        }
    }
    return f;
}

WignerFile read_wigner_binary(std::istream& is) {
    WignerFile f;
    f.header = get_header(is, "WIG1");
    f.xs.resize(f.header.length);
    f.ps.resize(f.header.extra);
    for (auto& x : f.xs) x = get_f64(is);
    for (auto& p : f.ps) p = get_f64(is);
    f.values.resize(static_cast<Eigen::Index>(f.xs.size()), static_cast<Eigen::Index>(f.ps.size()));
    for (Eigen::Index c = 0; c < f.values.cols(); ++c)
        for (Eigen::Index r = 0; r < f.values.rows(); ++r) f.values(r, c) = get_f64(is);
    return f;
}

void write_density_rows(std::ostream& os, const RelativeDensityGrid& grid) {
    const auto& xs = grid.xs();
    const auto& v = grid.values();
    std::string line;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const auto z = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            line.clear();
            append_double(line, grid.time());
            line += ',';
            append_double(line, xs[i]);
            line += ',';
            append_double(line, xs[j]);
            line += ',';
            append_double(line, z.real());
            line += ',';
            append_double(line, z.imag());
            line += '\n';
            os << line;
        }
    }
    check_stream(os);
}

void write_wigner_rows(std::ostream& os, const WignerGrid& grid) {
    std::string line;
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        for (std::size_t m = 0; m < grid.ps.size(); ++m) {
            line.clear();
            append_double(line, grid.time);
            line += ',';
            append_double(line, grid.xs[i]);
            line += ',';
            append_double(line, grid.ps[m]);
            line += ',';
            append_double(line, grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m)));
            line += '\n';
            os << line;
        }
    }
    check_stream(os);
}

void write_matrix_csv(std::ostream& os, const Eigen::Matrix4cd& m) {
    std::string line;
    for (int r = 0; r < 4; ++r) {
        line.clear();
        for (int c = 0; c < 4; ++c) {
            if (c) line += ',';
            append_double(line, m(r, c).real());
            line += ',';
            append_double(line, m(r, c).imag());
        }
        line += '\n';
        os << line;
    }
    check_stream(os);
}

}  // namespace ringcav::io
