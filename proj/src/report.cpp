#include "cdx/report.hpp"

#include <stdexcept>

namespace cdx {

ordered_json element_to_json(const Element& e) {
    ordered_json j;
    j["level"] = e.level();
    j["coeffs"] = coeffs_to_json(e);
    return j;
}

ordered_json coeffs_to_json(const Element& e) {
    ordered_json arr = ordered_json::array();
    for (const Scalar& c : e.coeffs()) arr.push_back(scalar_str(c));
    return arr;
}

std::vector<Scalar> coeffs_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw std::invalid_argument("coefficients must be rational strings");
        out.push_back(parse_scalar(item.get<std::string>()));
    }
    return out;
}

Element element_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("coeffs"))
        throw std::invalid_argument("element JSON needs {level, coeffs}");
    if (!j["level"].is_number_integer()) throw std::invalid_argument("element level must be an integer");
    return Element(j["level"].get<int>(), coeffs_from_json(j["coeffs"]));
}

ordered_json CheckResult::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["samples"] = samples;
    j["passed"] = passed;
    j["counterexample"] = counterexample.is_null() ? ordered_json(nullptr) : counterexample;
    return j;
}

bool Report::passed() const {
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return true;
}

CheckResult& Report::add(const std::string& name) {
    checks.push_back(CheckResult{name, 0, true, nullptr});
    return checks.back();
}

void Report::note(const std::string& text) { notes.push_back(text); }

void Report::absorb(const Report& child, const std::string& prefix) {
    for (const std::string& n : child.notes) notes.push_back(prefix + ": " + n);
    for (const CheckResult& c : child.checks) {
        checks.push_back(c);
        checks.back().name = prefix + "/" + c.name;
    }
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    j["anchor"] = anchor;
    j["config"] = config;
    j["passed"] = passed();
    j["notes"] = notes;
    ordered_json arr = ordered_json::array();
    for (const CheckResult& c : checks) arr.push_back(c.to_json());
    j["checks"] = arr;
    return j;
}

} // namespace cdx
