#pragma once

#include "abcodes/error.hpp"
#include "doctest.h"

#define CHECK_ERROR(expr, ec)                                  \
    do {                                                       \
        bool thrown_ = false;                                  \
        try {                                                  \
            (void)(expr);                                      \
        } catch (const abcodes::Error& e_) {                   \
            thrown_ = true;                                    \
            CHECK_MESSAGE(e_.code() == (ec), e_.what());       \
        }                                                      \
        CHECK_MESSAGE(thrown_, "expected " #ec " from " #expr); \
    } while (0)
