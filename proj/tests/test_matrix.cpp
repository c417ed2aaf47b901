#include <gtest/gtest.h>
#include "charvar/charvar.hpp"
TEST(Stub, Ok) { SUCCEED(); }
