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

#include "mtc/report.hpp"

#include <algorithm>

namespace mtc {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "?";
}

void Report::pass(const std::string& name, std::string detail) {
  checks_.push_back({name, Status::Pass, std::move(detail), {}, 0});
}

void Report::fail(const std::string& name, std::string detail,
                  std::map<std::string, std::string> witness) {
  checks_.push_back({name, Status::Fail, std::move(detail), std::move(witness), 0});
}

void Report::skip(const std::string& name, std::string detail) {
  checks_.push_back({name, Status::Skip, std::move(detail), {}, 0});
}

void Report::expect(const std::string& name, bool ok, std::string fail_detail) {
  if (ok)
    pass(name);
  else
    fail(name, std::move(fail_detail));
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.status == Status::Pass; });
}

bool Report::any_failed() const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.status == Status::Fail; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c && c->status == Status::Pass;
}

}  // namespace mtc
