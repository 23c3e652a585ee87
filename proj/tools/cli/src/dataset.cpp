#include "censtail_cli/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "censtail_cli/format.hpp"

namespace censtail::cli {

namespace {

bool split2(const std::string& line, std::string& a, std::string& b)
{
    const auto c = line.find(',');
    if (c == std::string::npos || line.find(',', c + 1) != std::string::npos)
        return false;
    a = line.substr(0, c);
    b = line.substr(c + 1);
    return true;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw user_error("cannot open " + path);
    return f;
}

}  // namespace

std::vector<CensoredObservation> DatasetFile::observations() const
{
    std::vector<CensoredObservation> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back({r.time, r.status});
    return out;
}

DatasetFile read_dataset(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != "time,status")
        throw user_error("expected header 'time,status' at line 1");
    DatasetFile d;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        std::string ts, ss;
        DatasetRow row;
        bool ok = split2(line, ts, ss);
        if (ok) {
            try {
                row.time = parse_double(ts, "time");
                const long long s = parse_int(ss, "status");
                ok = row.time > 0.0 && (s == 0 || s == 1);
                row.status = static_cast<int>(s);
            } catch (const user_error&) {
                ok = false;
            }
        }
        if (!ok)
            throw user_error("invalid observation at line " + std::to_string(lineno));
        row.time_text = trim(ts);
        d.rows.push_back(std::move(row));
    }
    if (d.rows.empty())
        throw user_error("empty sample");
    return d;
}

DatasetFile read_dataset_file(const std::string& path)
{
    auto f = open_input(path);
    return read_dataset(f);
}

void write_dataset(std::ostream& out, const DatasetFile& data)
{
    out << "time,status\n";
    for (const auto& r : data.rows)
        out << (r.time_text.empty() ? format_double(r.time) : r.time_text) << ',' << r.status
            << '\n';
}

OutlierInjection default_injection()
{
    const std::pair<double, const char*> t[] = {
        {1976, "36500"},     {2102, "40555.56"}, {2117, "45625"},     {2151, "52142.86"},
        {2183, "60833.33"},  {2228, "73000"},    {2252, "91250"},     {2295, "121666.67"},
        {2453, "182500"},    {2470, "365000"},
    };
    OutlierInjection inj;
    for (const auto& [o, r] : t)
        inj.push_back({o, parse_double(r, "replacement"), r});
    return inj;
}

OutlierInjection read_injection(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != "original,replacement")
        throw user_error("expected header 'original,replacement' at line 1");
    OutlierInjection inj;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        std::string a, b;
        Replacement r;
        bool ok = split2(line, a, b);
        if (ok) {
            try {
                r.original = parse_double(a, "original");
                r.replacement = parse_double(b, "replacement");
                ok = r.replacement > 0.0;
            } catch (const user_error&) {
                ok = false;
            }
        }
        if (!ok)
            throw user_error("invalid replacement at line " + std::to_string(lineno));
        r.replacement_text = trim(b);
        inj.push_back(std::move(r));
    }
    return inj;
}

OutlierInjection read_injection_file(const std::string& path)
{
    auto f = open_input(path);
    return read_injection(f);
}

DatasetFile contaminate(const DatasetFile& data, const OutlierInjection& table,
                        ContaminationReport* report)
{
    std::vector<std::size_t> unc;
    for (std::size_t i = 0; i < data.rows.size(); ++i)
        if (data.rows[i].status == 1)
            unc.push_back(i);
    if (unc.size() < table.size())
        throw user_error("injection table has " + std::to_string(table.size()) +
                         " entries but the data has only " + std::to_string(unc.size()) +
                         " uncensored rows");

    std::stable_sort(unc.begin(), unc.end(), [&](std::size_t a, std::size_t b) {
        return data.rows[a].time > data.rows[b].time;
    });
    std::vector<std::size_t> order(table.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return table[a].replacement > table[b].replacement;
    });

    DatasetFile out = data;
    if (report)
        *report = {};
    for (std::size_t j = 0; j < table.size(); ++j) {
        auto& row = out.rows[unc[j]];
        if (report) {
            report->replaced_rows.push_back(unc[j]);
            report->replaced_times.push_back(row.time);
        }
        const auto& rep = table[order[j]];
        row.time = rep.replacement;
        row.time_text = rep.replacement_text.empty() ? format_double(rep.replacement)
                                                     : rep.replacement_text;
    }
    return out;
}

}  // namespace censtail::cli
