#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/document.hpp"

namespace hopfkit {

enum class Status { Pass, Fail, Skipped, Error };
const char* status_name(Status s);

struct Result {
  std::string task;
  std::string subject;
  Status status = Status::Pass;
  std::string reason;
  std::vector<std::pair<std::string, std::string>> facts;  // in emission order
  std::vector<std::string> witnesses;                      // sorted
  double millis = 0;
};

struct Report {
  std::string source;
  std::string task;
  std::vector<Result> results;
  bool timing = false;

  bool failed() const;
  /* 2 if a result could not be computed from the input, else 1 if a check failed, else 0 */
  int exit_code() const;
  std::string text() const;
  std::string machine() const;
};

const std::vector<std::string>& task_names();

struct RunOptions {
  std::optional<std::vector<std::string>> objects;  // overrides the document defaults
  bool timing = false;
  BatchMode mode = BatchMode::Parallel;
};

/* Never throws for verification problems; UnknownName for a bad selection or task. */
Report run(const Document& doc, const std::string& task, const RunOptions& opt = {});

}  // namespace hopfkit
