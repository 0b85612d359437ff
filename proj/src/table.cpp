#include "qshutter/table.hpp"
#include "qshutter/errors.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace qshutter {

namespace {

double parse_double(std::string_view s, const char* what)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw usage_error(std::string(what) + ": bad number '" + std::string(s) + "'");
    return v;
}

std::string format_double(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

} // namespace

grid_spec grid_spec::parse(const std::string& text)
{
    auto parts = split(text, ':');
    if (parts.size() != 3)
        throw usage_error("grid: expected start:stop:count, got '" + text + "'");
    grid_spec g;
    g.start = parse_double(parts[0], "grid start");
    g.stop = parse_double(parts[1], "grid stop");
    long n = 0;
    auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size())
        throw usage_error("grid count: bad integer '" + std::string(parts[2]) + "'");
    g.count = int(n);
    g.validate();
    return g;
}

void grid_spec::validate() const
{
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw usage_error("grid: endpoints must be finite");
    if (!(start < stop))
        throw usage_error("grid: requires start < stop");
    if (count < 2)
        throw usage_error("grid: requires count >= 2");
}

std::vector<double> grid_spec::points() const
{
    validate();
    std::vector<double> pts(static_cast<std::size_t>(count));
    double h = (stop - start) / double(count - 1);
    for (int i = 0; i < count; ++i)
        pts[std::size_t(i)] = start + h * double(i);
    pts.back() = stop;
    return pts;
}

void sample_table::push(std::initializer_list<double> row)
{
    if (row.size() != columns.size())
        throw domain_error("sample_table: row arity does not match the header");
    rows.emplace_back(row);
}

std::string emit_csv(const sample_table& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i)
            out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

sample_table parse_csv(const std::string& text)
{
    sample_table t;
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty())
        throw usage_error("csv: missing header row");
    for (auto name : split(lines[0], ','))
        t.columns.emplace_back(name);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto fields = split(lines[li], ',');
        if (fields.size() != t.columns.size())
            throw usage_error("csv: row arity does not match the header");
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto f : fields)
            row.push_back(parse_double(f, "csv value"));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string emit_json(const sample_table& t)
{
    nlohmann::json j;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows)
        j["rows"].push_back(row);
    return j.dump() + "\n";
}

} // namespace qshutter
