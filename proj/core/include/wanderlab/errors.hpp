#pragma once

#include <stdexcept>
#include <string>

namespace wanderlab {

// Violated operation precondition (maps to CLI exit code 2).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A search or construction ran out of room (also exit code 2).
class search_error : public std::runtime_error {
 public:
  explicit search_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw precondition_error(msg);
}

}  // namespace wanderlab
