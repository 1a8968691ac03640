#pragma once

#include <gtest/gtest.h>

#include "fewembed/error.hpp"

namespace testing_support {

template <class Fn>
void expect_code(fewembed::ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << fewembed::to_string(code);
  } catch (const fewembed::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace testing_support
