#pragma once

#include <string>
#include <vector>

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Read a binary or ASCII PGM (P5/P2, maxval up to 65535). Samples are mapped
/// to [0, 1]; 16-bit data is big-endian per the format. The grid has unit
/// spacing.
ScalarField read_pgm(const std::string& path);

/// Write a 2D field as binary PGM with 8- or 16-bit samples. Values are
/// clamped to [0, 1] and quantised to the full range.
void write_pgm(const std::string& path, const ScalarField& field, int bit_depth = 16);

/// Plain CSV with a header row; every column must have the same length.
/// Values are printed with %.17g, so writing is reproducible bit for bit.
void write_csv(const std::string& path, const std::vector<std::string>& headers,
               const std::vector<std::vector<double>>& columns);

struct CsvTable {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& column(const std::string& name) const;
};
CsvTable read_csv(const std::string& path);

/// One row per iteration: iter, energy, residual.
void write_history_csv(const std::string& path, const SolveReport& report);

}  // namespace tvlinf
