#pragma once

#include <functional>

#include "cmlab/error.hpp"
#include "doctest.h"

// Asserts that `expr` throws cmlab::Error with the given code.
#define CHECK_ERRC(expr, errc)                                                   \
  do {                                                                           \
    bool thrown_ = false;                                                        \
    try {                                                                        \
      (void)(expr);                                                              \
    } catch (const cmlab::Error& e_) {                                           \
      thrown_ = true;                                                            \
      CHECK_MESSAGE(e_.code() == (errc), "got ", cmlab::to_string(e_.code()));   \
    }                                                                            \
    CHECK_MESSAGE(thrown_, "expected ", cmlab::to_string(errc), " from " #expr); \
  } while (false)
