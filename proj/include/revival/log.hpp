#ifndef REVIVAL_LOG_HPP
#define REVIVAL_LOG_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

namespace revival {

// Diagnostic verbosity from REVIVAL_LOG in {error, info, debug}; default error.
enum class LogLevel { error = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
    static LogLevel lvl = [] {
        const char* e = std::getenv("REVIVAL_LOG");
        if (e != nullptr) {
            std::string s(e);
            if (s == "debug") return LogLevel::debug;
            if (s == "info") return LogLevel::info;
        }
        return LogLevel::error;
    }();
    return lvl;
}

inline void log_msg(LogLevel lvl, const std::string& msg) {
    if (static_cast<int>(lvl) <= static_cast<int>(log_level()))
        std::fprintf(stderr, "[revival] %s\n", msg.c_str());
}

}  // namespace revival

#endif
