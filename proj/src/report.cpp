#include "rankfn/report.hpp"

namespace rankfn {

std::string to_string(CheckSection::Status status) {
  switch (status) {
    case CheckSection::Status::Passed: return "pass";
    case CheckSection::Status::Failed: return "fail";
    case CheckSection::Status::Structural: return "structural";
  }
  return "?";
}

}  // namespace rankfn
