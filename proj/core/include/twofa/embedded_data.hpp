#pragma once

namespace twofa::embedded {

// Generated from core/data at configure time; see embedded_data.cpp.in.
extern const char* const kDefaultPatterns;
extern const char* const kDefaultWords;

}  // namespace twofa::embedded
