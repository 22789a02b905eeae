#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsg::cli {

using Json = nlohmann::ordered_json;
using Fields = std::vector<std::pair<std::string, std::string>>;

struct ReportRow {
    Fields inputs;
    std::string computed;
    std::optional<std::string> expected;
    std::optional<int> digits_matched;
    std::optional<bool> pass;
    std::vector<std::string> terms;  // per-order contributions, json only
};

struct Report {
    std::string command;
    Json config = Json::object();
    std::vector<ReportRow> rows;
    std::optional<std::string> slope;  // decay studies
    std::string value_label = "computed";  // csv and text column name

    int passed() const;
    int failed() const;
};

Json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_text(const Report& r);
std::string render(const Report& r, const std::string& format);

} // namespace rsg::cli
