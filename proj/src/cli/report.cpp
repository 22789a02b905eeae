#include "rsg/cli/report.hpp"

#include "rsg/numkernel/precision.hpp"

#include <algorithm>
#include <sstream>

namespace rsg::cli {

int Report::passed() const {
    int n = 0;
    for (const auto& row : rows)
        n += row.pass.value_or(false) ? 1 : 0;
    return n;
}

int Report::failed() const {
    int n = 0;
    for (const auto& row : rows)
        n += (row.pass.has_value() && !*row.pass) ? 1 : 0;
    return n;
}

Json to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["config"] = r.config;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json jr;
        Json inputs = Json::object();
        for (const auto& [k, v] : row.inputs)
            inputs[k] = v;
        jr["inputs"] = inputs;
        jr["computed"] = row.computed;
        if (row.expected)
            jr["expected"] = *row.expected;
        if (row.digits_matched)
            jr["digits_matched"] = *row.digits_matched;
        if (row.pass)
            jr["pass"] = *row.pass;
        if (!row.terms.empty())
            jr["terms"] = row.terms;
        rows.push_back(jr);
    }
    j["rows"] = rows;
    Json summary;
    summary["passed"] = r.passed();
    summary["failed"] = r.failed();
    if (r.slope)
        summary["slope"] = *r.slope;
    j["summary"] = summary;
    return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> input_keys(const Report& r) {
    std::vector<std::string> keys;
    for (const auto& row : r.rows)
        for (const auto& kv : row.inputs)
            if (std::find(keys.begin(), keys.end(), kv.first) == keys.end())
                keys.push_back(kv.first);
    return keys;
}

std::string lookup(const Fields& f, const std::string& key) {
    for (const auto& [k, v] : f)
        if (k == key)
            return v;
    return "";
}

} // namespace

std::string render_csv(const Report& r) {
    auto keys = input_keys(r);
    bool any_expected = false, any_digits = false, any_pass = false;
    for (const auto& row : r.rows) {
        any_expected |= row.expected.has_value();
        any_digits |= row.digits_matched.has_value();
        any_pass |= row.pass.has_value();
    }
    std::ostringstream os;
    std::vector<std::string> header = keys;
    header.push_back(r.value_label);
    if (any_expected)
        header.push_back("expected");
    if (any_digits)
        header.push_back("digits_matched");
    if (any_pass)
        header.push_back("pass");
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << csv_field(header[i]);
    os << "\n";
    for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        for (const auto& k : keys)
            cells.push_back(lookup(row.inputs, k));
        cells.push_back(row.computed);
        if (any_expected)
            cells.push_back(row.expected.value_or(""));
        if (any_digits)
            cells.push_back(row.digits_matched ? std::to_string(*row.digits_matched) : "");
        if (any_pass)
            cells.push_back(row.pass ? (*row.pass ? "true" : "false") : "");
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
    }
    if (r.slope)
        os << "slope," << *r.slope << "\n";
    return os.str();
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        bool first = true;
        for (const auto& [k, v] : row.inputs) {
            os << (first ? "" : "  ") << k << "=" << v;
            first = false;
        }
        os << (first ? "" : "  ") << r.value_label << "=" << row.computed;
        if (row.expected)
            os << "  expected=" << *row.expected;
        if (row.digits_matched)
            os << "  digits=" << *row.digits_matched;
        if (row.pass)
            os << "  " << (*row.pass ? "PASS" : "FAIL");
        os << "\n";
    }
    if (r.slope)
        os << "slope " << *r.slope << "\n";
    if (r.passed() + r.failed() > 0)
        os << r.passed() << " passed, " << r.failed() << " failed\n";
    return os.str();
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json")
        return render_json(r);
    if (format == "csv")
        return render_csv(r);
    if (format == "text")
        return render_text(r);
    throw DomainError("unknown output format: " + format);
}

} // namespace rsg::cli
