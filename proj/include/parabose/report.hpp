#ifndef PARABOSE_REPORT_HPP
#define PARABOSE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace parabose {

enum class Status { Pass, Fail, Skip };

std::string_view status_name(Status s);

/// One checked identity: `axiom` names the law, `word` the input it was
/// evaluated on, `lhs`/`rhs` the two sides as printed Elements (or, for
/// numerical checks, the residual and the tolerance).
struct ReportEntry {
  std::string context;
  std::string axiom;
  std::string word;
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
};

class Report {
 public:
  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
  void add(std::string context, std::string axiom, std::string word, bool pass, std::string lhs,
           std::string rhs);
  void append(const Report& other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  std::size_t count(Status s) const;
  std::size_t failures() const { return count(Status::Fail); }
  bool all_passed() const { return failures() == 0; }

  /// Entries whose axiom equals `axiom`.
  std::vector<ReportEntry> select(const std::string& axiom) const;

  /// JSON array of {context?, axiom, word, status, lhs, rhs}; context is
  /// omitted when empty.
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace parabose

#endif
