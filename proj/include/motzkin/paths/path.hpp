#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

enum class Step : char { Up = 'U', Horizontal = 'H', Down = 'D' };

/// A Motzkin path: U/H/D steps that never go below height 0 and end at 0.
class Path {
 public:
  Path() = default;

  /// Throws std::invalid_argument if `steps` is not a Motzkin path.
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {
    long height = 0;
    for (Step s : steps_) {
      height += s == Step::Up ? 1 : s == Step::Down ? -1 : 0;
      if (height < 0) throw std::invalid_argument("path dips below height 0");
    }
    if (height != 0) throw std::invalid_argument("path does not return to height 0");
  }

  static Path parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'U': steps.push_back(Step::Up); break;
        case 'H': steps.push_back(Step::Horizontal); break;
        case 'D': steps.push_back(Step::Down); break;
        default: throw std::invalid_argument(std::string("unknown step '") + c + "'");
      }
    }
    return Path(std::move(steps));
  }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  std::string to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(static_cast<char>(st));
    return s;
  }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Step> steps_;
};

}  // namespace motzkin
