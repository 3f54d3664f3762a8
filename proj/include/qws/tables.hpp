#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qws {

/// Column-oriented result table. Cells are numbers or strings; numeric
/// formatting is fixed at 12 significant digits so repeated runs are
/// byte-identical.
struct Table {
    using Cell = std::variant<double, std::string>;

    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

std::string format_double(double v);

std::string to_csv(const Table& t);
std::string to_json(const std::vector<Table>& tables);

/// Serialize one or more tables in the requested format ("csv" or "json").
/// Multi-table CSV output concatenates sections separated by a "# table:"
/// comment line.
std::string render_tables(const std::vector<Table>& tables, const std::string& format);

/// Write via a temp file in the destination directory followed by rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace qws
