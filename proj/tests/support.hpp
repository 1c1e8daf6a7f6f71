#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "wfree/algebra.hpp"

namespace Catch {
template <>
struct StringMaker<wfree::State> {
  static std::string convert(const wfree::State& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
      os << (first ? "" : " + ") << "(" << c.str() << ")";
      for (const auto& md : m.modes) os << " g" << md.gen << "(" << md.n << ")";
      os << " |" << m.top.index;
      if (!m.top.mom.empty()) {
        os << ";";
        for (const auto& x : m.top.mom) os << " " << x.str();
      }
      os << ">";
      first = false;
    }
    return os.str();
  }
};
}  // namespace Catch
