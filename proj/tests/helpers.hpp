#pragma once

#include <doctest.h>

#include <functional>

#include "mqmap/error.hpp"
#include "mqmap/field.hpp"

// Runs f and checks it throws mqm::Error with the given code.
inline void check_throws_code(const std::function<void()>& f, mqm::ErrorCode code) {
  bool thrown = false;
  try {
    f();
  } catch (const mqm::Error& e) {
    thrown = true;
    CHECK_MESSAGE(e.code() == code, "got " << mqm::to_string(e.code()) << ": " << std::string(e.what()));
  }
  CHECK_MESSAGE(thrown, "expected " << mqm::to_string(code));
}

inline mqm::FieldPtr F(std::uint32_t order) { return mqm::parse_field_name("F" + std::to_string(order)); }

// t + 1 and friends in F4 = F2[t]/(t^2+t+1): index c0 + 2 c1.
namespace f4 {
constexpr mqm::Elem zero = 0, one = 1, t = 2, t1 = 3;
}
