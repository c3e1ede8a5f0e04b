#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace gqg {

// Time series of named diagnostic scalars. Column set is fixed by the first
// sample; later samples must carry exactly the same names. Times strictly
// increase.
class RunRecord {
  public:
    struct Sample {
        double time;
        std::vector<double> values;  // parallel to columns()
    };

    void add_sample(double time, const std::map<std::string, double>& scalars);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<Sample>& samples() const { return samples_; }
    std::map<std::string, std::string>& metadata() { return metadata_; }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }

    bool has_column(const std::string& name) const;
    // value of a named scalar at sample i
    double value(size_t i, const std::string& name) const;

    // header row of column names (time first), then one row per sample
    void write_csv(std::ostream& os) const;
    // {"metadata": {...}, "columns": [...], "samples": [{"time":..,"values":[..]}]}
    void write_json(std::ostream& os) const;

  private:
    std::vector<std::string> columns_;
    std::vector<Sample> samples_;
    std::map<std::string, std::string> metadata_;
};

// canonical column name for an H^s norm sample, e.g. hs_1.75
std::string hs_column(double s);

}  // namespace gqg
