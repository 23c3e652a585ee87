#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "censtail/sample.hpp"

namespace censtail::cli {

// Bad input supplied by the user; maps to exit code 1.
class user_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DatasetRow {
    double time = 0.0;
    int status = 0;
    std::string time_text;   // as read, so untouched rows are written back verbatim
};

struct DatasetFile {
    std::vector<DatasetRow> rows;

    std::vector<CensoredObservation> observations() const;
};

DatasetFile read_dataset(std::istream& in);
DatasetFile read_dataset_file(const std::string& path);
void write_dataset(std::ostream& out, const DatasetFile& data);

struct Replacement {
    double original = 0.0;
    double replacement = 0.0;
    std::string replacement_text;
};

using OutlierInjection = std::vector<Replacement>;

// Ten largest uncensored survival times of the male AIDS patients and the
// outliers that replace them.
OutlierInjection default_injection();

// CSV with header "original,replacement".
OutlierInjection read_injection(std::istream& in);
OutlierInjection read_injection_file(const std::string& path);

struct ContaminationReport {
    std::vector<std::size_t> replaced_rows;   // 0-based data row indices
    std::vector<double> replaced_times;       // values before replacement
};

// Replaces the m largest uncensored times (ties by row order) by the m
// replacement values, largest to largest.
DatasetFile contaminate(const DatasetFile& data, const OutlierInjection& table,
                        ContaminationReport* report = nullptr);

}  // namespace censtail::cli
