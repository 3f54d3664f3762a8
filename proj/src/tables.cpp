#include "qws/tables.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qws {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table::add_row: cell count does not match columns");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Table::Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    return csv_escape(std::get<std::string>(c));
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<Table>& tables) {
    nlohmann::ordered_json root;
    root["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            auto jr = nlohmann::ordered_json::array();
            for (const auto& c : row) {
                if (std::holds_alternative<double>(c))
                    jr.push_back(std::get<double>(c));
                else
                    jr.push_back(std::get<std::string>(c));
            }
            rows.push_back(std::move(jr));
        }
        jt["rows"] = std::move(rows);
        root["tables"].push_back(std::move(jt));
    }
    return root.dump(2) + "\n";
}

std::string render_tables(const std::vector<Table>& tables, const std::string& format) {
    if (format == "json") return to_json(tables);
    if (format != "csv")
        throw std::invalid_argument("render_tables: unknown format " + format);
    std::string out;
    for (const auto& t : tables) {
        if (tables.size() > 1) out += "# table: " + t.name + "\n";
        out += to_csv(t);
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << contents;
        if (!f) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace qws
