#pragma once

#include <gtest/gtest.h>

#include "proxigraph/error.hpp"

// Asserts that `stmt` throws proxigraph::Error of the given kind.
#define EXPECT_PG_ERROR(stmt, expected_kind)                                          \
  do {                                                                                \
    try {                                                                             \
      (void)(stmt);                                                                   \
      ADD_FAILURE() << #stmt " did not throw";                                        \
    } catch (const proxigraph::Error& e_) {                                           \
      EXPECT_EQ(e_.kind(), expected_kind) << e_.name() << ": " << e_.what();          \
    }                                                                                 \
  } while (0)
