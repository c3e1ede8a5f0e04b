#include "gqg/run_record.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace gqg {

void RunRecord::add_sample(double time, const std::map<std::string, double>& scalars) {
    if (!samples_.empty() && time <= samples_.back().time)
        throw std::invalid_argument("RunRecord: sample times must strictly increase");
    if (columns_.empty()) {
        for (const auto& [k, v] : scalars) {
            (void)v;
            columns_.push_back(k);
        }
    } else {
        if (scalars.size() != columns_.size())
            throw std::invalid_argument("RunRecord: sample scalar set changed");
        for (const auto& c : columns_)
            if (!scalars.count(c))
                throw std::invalid_argument("RunRecord: sample missing scalar " + c);
    }
    Sample s;
    s.time = time;
    s.values.reserve(columns_.size());
    for (const auto& c : columns_) s.values.push_back(scalars.at(c));
    samples_.push_back(std::move(s));
}

bool RunRecord::has_column(const std::string& name) const {
    return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

double RunRecord::value(size_t i, const std::string& name) const {
    auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw std::out_of_range("RunRecord: no column " + name);
    return samples_.at(i).values[it - columns_.begin()];
}

void RunRecord::write_csv(std::ostream& os) const {
    os << "time";
    for (const auto& c : columns_) os << "," << c;
    os << "\n";
    char buf[32];
    for (const auto& s : samples_) {
        std::snprintf(buf, sizeof buf, "%.17g", s.time);
        os << buf;
        for (double v : s.values) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << "," << buf;
        }
        os << "\n";
    }
}

void RunRecord::write_json(std::ostream& os) const {
    nlohmann::json j;
    j["metadata"] = metadata_;
    j["columns"] = columns_;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : samples_)
        j["samples"].push_back({{"time", s.time}, {"values", s.values}});
    os << j.dump(2) << "\n";
}

std::string hs_column(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "hs_%.6g", s);
    return buf;
}

}  // namespace gqg
