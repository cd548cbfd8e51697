// Copyright 2026 The mtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtc {

enum class Status { Pass, Fail, Skip };

const char* status_name(Status s);

/** Outcome of one named check, with witness data for failures. */
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::map<std::string, std::string> witness;
  double seconds = 0;
};

class Report {
 public:
  void pass(const std::string& name, std::string detail = {});
  void fail(const std::string& name, std::string detail,
            std::map<std::string, std::string> witness = {});
  void skip(const std::string& name, std::string detail);
  /** Records pass or fail depending on ok. */
  void expect(const std::string& name, bool ok, std::string fail_detail = {});
  void add(Check c) { checks_.push_back(std::move(c)); }
  void merge(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& checks() { return checks_; }
  bool all_passed() const;
  bool any_failed() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;

 private:
  std::vector<Check> checks_;
};

/** Raised when a structural certificate that must hold by construction fails. */
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mtc
