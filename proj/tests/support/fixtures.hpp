#pragma once

#include <map>
#include <string>

namespace gesture::testing {

/// Every bundled fixture, keyed by path relative to fixtures/. The files in
/// the repository are exactly this output (checked by test_fixtures).
std::map<std::string, std::string> generate_fixtures();

/// Target report rows for the bundled study records, in hundredths of a percent.
struct StudyRow {
    const char* action;
    const char* label;
    long long detection;
    long long accuracy;
};

inline constexpr StudyRow kStudyTable[] = {
    {"LeftClick", "Left Click", 9587, 9924},   {"RightClick", "Right Click", 9389, 9938},
    {"DoubleClick", "Double Click", 9823, 9915}, {"Scroll", "Scroll", 9158, 9918},
    {"Keypress", "Keypress", 9691, 9992},      {"Point", "Point", 9872, 9997},
};

}  // namespace gesture::testing
