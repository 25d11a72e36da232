#include "tvlinf/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tvlinf {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
int next_header_int(std::istream& in, const std::string& path) {
    while (true) {
        const int c = in.peek();
        if (c == EOF) throw std::runtime_error("read_pgm: truncated header in " + path);
        if (std::isspace(c)) {
            in.get();
        } else if (c == '#') {
            std::string skip;
            std::getline(in, skip);
        } else {
            break;
        }
    }
    int value = 0;
    if (!(in >> value)) throw std::runtime_error("read_pgm: malformed header in " + path);
    return value;
}

}  // namespace

ScalarField read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_pgm: cannot open " + path);

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || (m1 != '5' && m1 != '2'))
        throw std::runtime_error("read_pgm: not a PGM file: " + path);
    const bool binary = (m1 == '5');

    const int width = next_header_int(in, path);
    const int height = next_header_int(in, path);
    const int maxval = next_header_int(in, path);
    if (width < 2 || height < 2 || maxval < 1 || maxval > 65535)
        throw std::runtime_error("read_pgm: unsupported dimensions or maxval in " + path);

    const std::int64_t count = static_cast<std::int64_t>(width) * height;
    std::vector<double> values(static_cast<std::size_t>(count));

    if (binary) {
        in.get();  // single whitespace after maxval
        if (maxval < 256) {
            std::vector<std::uint8_t> raw(static_cast<std::size_t>(count));
            in.read(reinterpret_cast<char*>(raw.data()), count);
            if (!in) throw std::runtime_error("read_pgm: truncated data in " + path);
            for (std::int64_t i = 0; i < count; ++i) values[i] = raw[i] / double(maxval);
        } else {
            std::vector<std::uint8_t> raw(static_cast<std::size_t>(2 * count));
            in.read(reinterpret_cast<char*>(raw.data()), 2 * count);
            if (!in) throw std::runtime_error("read_pgm: truncated data in " + path);
            for (std::int64_t i = 0; i < count; ++i) {
                const int v = (raw[2 * i] << 8) | raw[2 * i + 1];  // big-endian
                values[i] = v / double(maxval);
            }
        }
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            int v = 0;
            if (!(in >> v)) throw std::runtime_error("read_pgm: truncated data in " + path);
            values[i] = v / double(maxval);
        }
    }
    return ScalarField(GridSpec::plane(width, height), std::move(values));
}

void write_pgm(const std::string& path, const ScalarField& field, int bit_depth) {
    if (field.grid().dims() != 2)
        throw std::invalid_argument("write_pgm: only 2D fields can be written");
    if (bit_depth != 8 && bit_depth != 16)
        throw std::invalid_argument("write_pgm: bit_depth must be 8 or 16");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm: cannot open " + path);

    const int maxval = (bit_depth == 8) ? 255 : 65535;
    const int nx = field.grid().size(0), ny = field.grid().size(1);
    out << "P5\n" << nx << " " << ny << "\n" << maxval << "\n";
    const std::int64_t count = field.size();
    for (std::int64_t i = 0; i < count; ++i) {
        const double c = std::clamp(field[i], 0.0, 1.0);
        const long q = std::lround(c * maxval);
        if (bit_depth == 8) {
            out.put(static_cast<char>(q));
        } else {
            out.put(static_cast<char>((q >> 8) & 0xff));
            out.put(static_cast<char>(q & 0xff));
        }
    }
    if (!out) throw std::runtime_error("write_pgm: write failed for " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& headers,
               const std::vector<std::vector<double>>& columns) {
    if (headers.size() != columns.size())
        throw std::invalid_argument("write_csv: header/column count mismatch");
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("write_csv: ragged columns");

    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    for (std::size_t j = 0; j < headers.size(); ++j)
        out << headers[j] << (j + 1 < headers.size() ? ',' : '\n');
    char buf[64];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", columns[j][r]);
            out << buf << (j + 1 < columns.size() ? ',' : '\n');
        }
    }
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t j = 0; j < headers.size(); ++j)
        if (headers[j] == name) return columns[j];
    throw std::out_of_range("CsvTable: no column named " + name);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);

    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) table.headers.push_back(tok);
    }
    table.columns.assign(table.headers.size(), {});
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::size_t j = 0;
        while (std::getline(ss, tok, ',')) {
            if (j >= table.columns.size())
                throw std::runtime_error("read_csv: row wider than header in " + path);
            table.columns[j++].push_back(std::stod(tok));
        }
        if (j != table.columns.size())
            throw std::runtime_error("read_csv: short row in " + path);
    }
    return table;
}

void write_history_csv(const std::string& path, const SolveReport& report) {
    std::vector<double> iters(static_cast<std::size_t>(report.iterations));
    for (int i = 0; i < report.iterations; ++i) iters[static_cast<std::size_t>(i)] = i + 1;
    write_csv(path, {"iter", "energy", "residual"},
              {iters, report.energy_history, report.residual_history});
}

}  // namespace tvlinf
