#pragma once

#include <string>
#include <vector>

#include "enrfem/mesh.hpp"

namespace enrfem {

/// CSV table with a fixed column schema. write() emits a '#' provenance
/// comment carrying a hash of the originating configuration, then the
/// header row, then rows in insertion order. Numbers use scientific
/// notation with 17 significant digits and '.' decimal separator so that
/// identical runs produce byte-identical files.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_row(const std::vector<double>& values);
  /// Mixed row: strings are written verbatim (no quoting needed for the
  /// identifiers used here).
  void add_row_text(const std::vector<std::string>& cells);

  void write(const std::string& path, const std::string& config_text) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_csv_number(double v);

/// FNV-1a hash of the configuration text, hex-encoded. Stable across
/// platforms; used only for provenance tagging of output files.
std::string config_hash(const std::string& config_text);

/// Legacy ASCII VTK unstructured grid: POINTS, CELLS (type 5 triangles)
/// and one CELL_DATA scalar array per entry of cell_fields. Optional
/// POINT_DATA vector field (displacements, 2 components padded to 3).
void write_vtk(const std::string& path, const Mesh& mesh,
               const std::vector<std::pair<std::string, std::vector<double>>>&
                   cell_fields,
               const std::vector<double>* point_displacements = nullptr);

}  // namespace enrfem
