#include "parabose/report.hpp"

#include <algorithm>

namespace parabose {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

void Report::add(std::string context, std::string axiom, std::string word, bool pass, std::string lhs,
                 std::string rhs) {
  entries_.push_back({std::move(context), std::move(axiom), std::move(word),
                      pass ? Status::Pass : Status::Fail, std::move(lhs), std::move(rhs)});
}

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

std::vector<ReportEntry> Report::select(const std::string& axiom) const {
  std::vector<ReportEntry> out;
  std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
               [&](const ReportEntry& e) { return e.axiom == axiom; });
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json item;
    if (!e.context.empty()) item["context"] = e.context;
    item["axiom"] = e.axiom;
    item["word"] = e.word;
    item["status"] = status_name(e.status);
    item["lhs"] = e.lhs;
    item["rhs"] = e.rhs;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace parabose
