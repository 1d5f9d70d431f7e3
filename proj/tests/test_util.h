#pragma once

#include <gtest/gtest.h>

#include "generators.h"
#include "univgate/errors.h"

namespace univgate::testing {

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace univgate::testing
