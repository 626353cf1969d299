#include "turanx/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "turanx/graph6.hpp"

namespace turanx {

namespace {

using nlohmann::json;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

json row_to_json(const SuiteRow& row) {
    json j;
    j["instance"] = row.instance;
    j["formula"] = row.formula ? json(*row.formula) : json(nullptr);
    j["search"] = row.search_value ? json(*row.search_value) : json(nullptr);
    j["construction"] = row.construction ? json(*row.construction) : json(nullptr);
    j["informational"] = row.informational;
    j["agree"] = row.agree;
    j["unique"] = row.extremal_unique ? json(*row.extremal_unique) : json(nullptr);
    j["notes"] = row.notes;
    return j;
}

} // namespace

std::string to_json(const SearchOutcome& outcome) {
    json problem;
    problem["n"] = outcome.n;
    if (outcome.s) problem["s"] = *outcome.s;
    problem["objective"] = outcome.objective_label;
    problem["pattern"] = outcome.pattern.label;

    std::vector<std::string> extremal;
    for (const auto& form : outcome.extremal) extremal.push_back(to_graph6(form.to_graph()));
    std::sort(extremal.begin(), extremal.end());

    json j;
    j["problem"] = problem;
    j["optimum"] = to_decimal(outcome.optimum);
    j["extremal"] = extremal;
    j["graphs_examined"] = outcome.graphs_examined;
    j["elapsed_ms"] = outcome.elapsed.count();
    j["unique"] = outcome.unique;
    return j.dump();
}

std::string to_json(const SuiteReport& report) {
    json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass;
    j["rows"] = json::array();
    for (const auto& row : report.rows) j["rows"].push_back(row_to_json(row));
    return j.dump();
}

std::string to_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite,instance,formula,search,construction,agree,informational,unique,notes\n";
    for (const auto& row : report.rows) {
        out << csv_escape(report.suite) << ',' << csv_escape(row.instance) << ','
            << (row.formula ? *row.formula : "") << ',' << (row.search_value ? *row.search_value : "")
            << ',' << (row.construction ? *row.construction : "") << ',' << (row.agree ? "true" : "false")
            << ',' << (row.informational ? "true" : "false") << ','
            << (row.extremal_unique ? (*row.extremal_unique ? "true" : "false") : "") << ','
            << csv_escape(row.notes) << '\n';
    }
    return out.str();
}

std::string to_table(const SuiteReport& report) {
    const std::vector<std::string> header = {"instance", "formula", "search", "construction",
                                             "agree",    "info",    "unique", "notes"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : report.rows) {
        cells.push_back({row.instance, row.formula.value_or("-"), row.search_value.value_or("-"),
                         row.construction.value_or("-"), row.agree ? "yes" : "NO",
                         row.informational ? "info" : "",
                         row.extremal_unique ? (*row.extremal_unique ? "yes" : "no") : "-", row.notes});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    out << "suite: " << report.suite << "\n";
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : cells) emit(row);
    out << (report.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace turanx
