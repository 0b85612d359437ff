#pragma once

#include <string>
#include <vector>

namespace qshutter {

struct grid_spec {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    static grid_spec parse(const std::string& text); // "start:stop:count"
    std::vector<double> points() const;
    void validate() const; // start < stop, count >= 2, finite
};

struct sample_table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void push(std::initializer_list<double> row);
};

// CSV with a header row; values serialized so that parse_csv(emit_csv(t))
// reproduces every double bit-exactly
std::string emit_csv(const sample_table& t);
sample_table parse_csv(const std::string& text);

// {"columns": [...], "rows": [[...], ...]}
std::string emit_json(const sample_table& t);

} // namespace qshutter
