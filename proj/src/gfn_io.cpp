#include "charcone/gfn_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "charcone/error.hpp"

namespace charcone {

namespace {

using nlohmann::json;

template <class T>
T require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(where + ": missing key '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw FormatError(where + "/" + key + ": wrong type");
    }
}

std::uint64_t swap_if_big(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
        return r;
    }
    return v;
}

std::string read_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("unexpected end of file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

nlohmann::json grid_to_json(const Grid& grid) {
    json axes = json::array();
    for (const auto& a : grid.axes)
        axes.push_back({{"min", a.min}, {"step", a.step}, {"count", a.count}, {"offset", std::string(to_string(a.offset))}});
    return {{"version", kGfnVersion},
            {"kind", std::string(to_string(grid.kind))},
            {"m", grid.params.m},
            {"n", grid.params.n},
            {"axes", axes}};
}

Grid grid_from_json(const nlohmann::json& j) {
    const std::string where = "header";
    if (!j.is_object()) throw FormatError("malformed header: not a JSON object");
    const int version = require<int>(j, "version", where);
    if (version != kGfnVersion)
        throw FormatError("version mismatch: file has version " + std::to_string(version) + ", expected " +
                          std::to_string(kGfnVersion));
    Grid g;
    try {
        g.kind = grid_kind_from_string(require<std::string>(j, "kind", where));
    } catch (const DomainError& e) {
        throw FormatError(where + "/kind: " + e.what());
    }
    g.params.m = require<double>(j, "m", where);
    g.params.n = require<int>(j, "n", where);
    if (!j.contains("axes") || !j.at("axes").is_array()) throw FormatError(where + ": missing array 'axes'");
    std::size_t i = 0;
    for (const auto& a : j.at("axes")) {
        const std::string aw = where + "/axes/" + std::to_string(i++);
        AxisSpec s;
        s.min = require<double>(a, "min", aw);
        s.step = require<double>(a, "step", aw);
        s.count = require<std::size_t>(a, "count", aw);
        try {
            s.offset = axis_offset_from_string(require<std::string>(a, "offset", aw));
        } catch (const DomainError& e) {
            throw FormatError(aw + "/offset: " + e.what());
        }
        g.axes.push_back(s);
    }
    try {
        g.validate();
    } catch (const DomainError& e) {
        throw FormatError(std::string("invalid grid in header: ") + e.what());
    }
    return g;
}

void write_gfn(const GridFunction& gf, const std::filesystem::path& path) {
    gf.grid().validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << "GFN1\n" << grid_to_json(gf.grid()).dump() << '\n';
    std::vector<std::uint64_t> buf(2 * gf.size());
    for (std::size_t i = 0; i < gf.size(); ++i) {
        buf[2 * i] = swap_if_big(std::bit_cast<std::uint64_t>(gf[i].real()));
        buf[2 * i + 1] = swap_if_big(std::bit_cast<std::uint64_t>(gf[i].imag()));
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 8));
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

GridFunction read_gfn(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    if (read_line(in) != "GFN1") throw FormatError("malformed header: missing GFN1 magic line");
    json header;
    try {
        header = json::parse(read_line(in));
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed header: ") + e.what());
    }
    Grid grid = grid_from_json(header);
    const std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t expected = grid.size() * 16;
    if (payload.size() != expected)
        throw FormatError("payload length mismatch: expected " + std::to_string(expected) + " bytes, found " +
                          std::to_string(payload.size()));
    std::vector<cplx> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint64_t re = 0;
        std::uint64_t im = 0;
        std::memcpy(&re, payload.data() + 16 * i, 8);
        std::memcpy(&im, payload.data() + 16 * i + 8, 8);
        values[i] = {std::bit_cast<double>(swap_if_big(re)), std::bit_cast<double>(swap_if_big(im))};
    }
    try {
        return GridFunction(std::move(grid), std::move(values));
    } catch (const DomainError& e) {
        throw FormatError(std::string("invalid payload: ") + e.what());
    }
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string axis_name(GridKind kind, int axis, int /*n*/) {
    switch (kind) {
        case GridKind::minkowski_momentum: return "p" + std::to_string(axis + 1);
        case GridKind::minkowski_position: return "x" + std::to_string(axis + 1);
        case GridKind::lc_momentum: return axis == 0 ? "p_plus" : "p_perp" + std::to_string(axis);
        case GridKind::lc_position: return axis == 0 ? "x_minus" : "x_perp" + std::to_string(axis);
    }
    return "axis" + std::to_string(axis);
}

void to_csv(const GridFunction& gf, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    const Grid& g = gf.grid();
    const int n = g.dim();
    out << "# " << grid_to_json(g).dump() << '\n';
    for (int d = 0; d < n; ++d) out << axis_name(g.kind, d, n) << ',';
    out << "re,im\n";
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < gf.size(); ++i) {
        g.node(i, x);
        for (double c : x) out << format_double(c) << ',';
        out << format_double(gf[i].real()) << ',' << format_double(gf[i].imag()) << '\n';
    }
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

GridFunction read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::string line = read_line(in);
    if (line.rfind("# ", 0) != 0) throw FormatError("csv: missing '# {json}' metadata line");
    json header;
    try {
        header = json::parse(line.substr(2));
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("csv: malformed metadata: ") + e.what());
    }
    Grid grid = grid_from_json(header);
    read_line(in);
    const auto cols = static_cast<std::size_t>(grid.dim()) + 2;
    std::vector<cplx> values;
    values.reserve(grid.size());
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++row;
        std::vector<double> fields;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p <= end) {
            const char* comma = std::find(p, end, ',');
            double v = 0.0;
            const auto r = std::from_chars(p, comma, v);
            if (r.ec != std::errc() || r.ptr != comma)
                throw FormatError("csv: row " + std::to_string(row) + ": unparsable number");
            fields.push_back(v);
            p = comma + 1;
        }
        if (fields.size() != cols)
            throw FormatError("csv: row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                              " columns, expected " + std::to_string(cols));
        values.emplace_back(fields[cols - 2], fields[cols - 1]);
    }
    if (values.size() != grid.size())
        throw FormatError("csv: " + std::to_string(values.size()) + " rows, grid has " + std::to_string(grid.size()) +
                          " nodes");
    return GridFunction(std::move(grid), std::move(values));
}

}  // namespace charcone
