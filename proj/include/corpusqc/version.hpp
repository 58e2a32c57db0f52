#pragma once

#include <string>

namespace corpusqc {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "corpusqc";

// Definition of the code-length token counter, recorded in manifests.
inline constexpr const char* kTokenCounter =
    "python3 lexical tokens: NAME, NUMBER, STRING, OP (f-strings count as one STRING); "
    "COMMENT, NL, NEWLINE, INDENT, DEDENT and ENDMARKER excluded";

inline constexpr const char* kPromptFormat = "description + \"\\n\" + signature";

inline std::string version_string() { return std::string(kToolName) + " " + kVersion; }

}  // namespace corpusqc
