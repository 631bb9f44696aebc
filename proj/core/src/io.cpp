#include "hhgq/io.hpp"

#include "hhgq/errors.hpp"
#include "hhgq/units.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace hhgq {

namespace {

void append_cell(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    out += buf;
}

void append_row(std::string& out, std::initializer_list<double> cells) {
    bool first = true;
    for (double v : cells) {
        if (!first) out += ',';
        append_cell(out, v);
        first = false;
    }
    out += '\n';
}

} // namespace

std::string spectrum_csv(const SpectrumTrace& spec) {
    std::string out = "harmonic_order,total_db,interband_db,intraband_db\n";
    for (std::size_t k = 0; k < spec.order.size(); ++k)
        append_row(out, {spec.order[k], spec.total_db[k], spec.inter_db[k], spec.intra_db[k]});
    return out;
}

std::string current_csv(const CurrentTrace& trace, const TimeGrid& grid) {
    std::string out = "t_fs,j_tra,j_ter\n";
    for (int i = 0; i < grid.n; ++i)
        append_row(out, {units::au_to_fs(grid.t(i)), trace.j_tra[i], trace.j_ter[i]});
    return out;
}

std::string wigner_csv(const WignerMap& map) {
    std::string out = "x,p,w\n";
    for (int jp = 0; jp < map.n; ++jp)
        for (int ix = 0; ix < map.n; ++ix)
            append_row(out, {map.x(ix), map.p(jp), map.value(ix, jp)});
    return out;
}

std::string displacements_csv(const ModeDisplacements& disp) {
    std::string out = "q,re_chi,im_chi\n";
    for (int q = 1; q <= disp.n_modes(); ++q) {
        out += std::to_string(q);
        out += ',';
        append_cell(out, disp.chi_q(q).real());
        out += ',';
        append_cell(out, disp.chi_q(q).imag());
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const SBETrajectory& traj, const TimeGrid& grid) {
    std::string out = "t_fs,n_v,n_c,re_pi,im_pi\n";
    for (int i = 0; i < grid.n; ++i)
        append_row(out, {units::au_to_fs(grid.t(i)), traj.n_v[i], traj.n_c[i],
                         traj.pi[i].real(), traj.pi[i].imag()});
    return out;
}

std::string scan_csv(const std::string& axis_name, const std::vector<std::string>& value_names,
                     const std::vector<double>& axis,
                     const std::vector<std::vector<double>>& values) {
    std::string out = axis_name;
    for (const auto& name : value_names) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < axis.size(); ++i) {
        append_cell(out, axis[i]);
        for (const auto& column : values) {
            out += ',';
            append_cell(out, column[i]);
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

// Compact SHA-256 (FIPS 180-4).
struct Sha256 {
    std::array<std::uint32_t, 8> h{0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                                   0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
    std::array<std::uint8_t, 64> block{};
    std::size_t block_len = 0;
    std::uint64_t total_len = 0;

    static constexpr std::array<std::uint32_t, 64> k{
        0x428a2f98u, 0x71374491u, 0xb5c0fbcfu, 0xe9b5dba5u, 0x3956c25bu, 0x59f111f1u,
        0x923f82a4u, 0xab1c5ed5u, 0xd807aa98u, 0x12835b01u, 0x243185beu, 0x550c7dc3u,
        0x72be5d74u, 0x80deb1feu, 0x9bdc06a7u, 0xc19bf174u, 0xe49b69c1u, 0xefbe4786u,
        0x0fc19dc6u, 0x240ca1ccu, 0x2de92c6fu, 0x4a7484aau, 0x5cb0a9dcu, 0x76f988dau,
        0x983e5152u, 0xa831c66du, 0xb00327c8u, 0xbf597fc7u, 0xc6e00bf3u, 0xd5a79147u,
        0x06ca6351u, 0x14292967u, 0x27b70a85u, 0x2e1b2138u, 0x4d2c6dfcu, 0x53380d13u,
        0x650a7354u, 0x766a0abbu, 0x81c2c92eu, 0x92722c85u, 0xa2bfe8a1u, 0xa81a664bu,
        0xc24b8b70u, 0xc76c51a3u, 0xd192e819u, 0xd6990624u, 0xf40e3585u, 0x106aa070u,
        0x19a4c116u, 0x1e376c08u, 0x2748774cu, 0x34b0bcb5u, 0x391c0cb3u, 0x4ed8aa4au,
        0x5b9cca4fu, 0x682e6ff3u, 0x748f82eeu, 0x78a5636fu, 0x84c87814u, 0x8cc70208u,
        0x90befffau, 0xa4506cebu, 0xbef9a3f7u, 0xc67178f2u};

    static std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void process_block(const std::uint8_t* p) {
        std::array<std::uint32_t, 64> w{};
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
                   (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            const auto s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            const auto s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        auto [a, b, c, d, e, f, g, hh] = h;
        for (int i = 0; i < 64; ++i) {
            const auto s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            const auto ch = (e & f) ^ (~e & g);
            const auto t1 = hh + s1 + ch + k[i] + w[i];
            const auto s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            const auto maj = (a & b) ^ (a & c) ^ (b & c);
            const auto t2 = s0 + maj;
            hh = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const std::uint8_t* data, std::size_t len) {
        total_len += len;
        while (len > 0) {
            const std::size_t take = std::min(len, block.size() - block_len);
            std::memcpy(block.data() + block_len, data, take);
            block_len += take;
            data += take;
            len -= take;
            if (block_len == block.size()) {
                process_block(block.data());
                block_len = 0;
            }
        }
    }

    std::string finish() {
        const std::uint64_t bits = total_len * 8;
        const std::uint8_t pad = 0x80;
        update(&pad, 1);
        const std::uint8_t zero = 0x00;
        while (block_len != 56) update(&zero, 1);
        std::uint8_t len_be[8];
        for (int i = 0; i < 8; ++i) len_be[i] = static_cast<std::uint8_t>(bits >> (56 - 8 * i));
        update(len_be, 8);
        std::string out;
        out.reserve(64);
        for (std::uint32_t v : h) {
            char buf[9];
            std::snprintf(buf, sizeof(buf), "%08x", v);
            out += buf;
        }
        return out;
    }
};

} // namespace

std::string sha256_hex(const std::string& data) {
    Sha256 hasher;
    hasher.update(reinterpret_cast<const std::uint8_t*>(data.data()), data.size());
    return hasher.finish();
}

} // namespace hhgq
