#pragma once

#include <cstddef>
#include <string>
#include <deque>
#include <vector>

namespace rankfn {

struct Finding {
  std::string location;
  std::string message;
};

/// Outcome of one named check (an axiom, a law, an invariant).
struct CheckSection {
  enum class Status { Passed, Failed, Structural };

  std::string name;
  Status status = Status::Passed;
  std::size_t checked = 0;
  std::vector<Finding> findings;

  bool ok() const { return status != Status::Failed; }
  void fail(std::string location, std::string message) {
    status = Status::Failed;
    findings.push_back({std::move(location), std::move(message)});
  }
};

/// A list of sections; violations are entries, never exceptions.
struct Report {
  std::deque<CheckSection> sections;

  bool passed() const {
    for (const auto& s : sections) {
      if (!s.ok()) return false;
    }
    return true;
  }

  CheckSection& add(std::string name) {
    sections.push_back({std::move(name), CheckSection::Status::Passed, 0, {}});
    return sections.back();
  }

  CheckSection& add_structural(std::string name, std::string note) {
    auto& s = add(std::move(name));
    s.status = CheckSection::Status::Structural;
    s.findings.push_back({"", std::move(note)});
    return s;
  }

  const CheckSection* find(const std::string& name) const {
    for (const auto& s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }

  void append(const Report& other) {
    sections.insert(sections.end(), other.sections.begin(), other.sections.end());
  }
};

std::string to_string(CheckSection::Status status);

}  // namespace rankfn
