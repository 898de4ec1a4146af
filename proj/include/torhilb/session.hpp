#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torhilb/theorems.hpp"

namespace torhilb {

// One task statement from a session file.
struct SessionTask {
    std::string kind;  // sample | diagonal | mixed | fit | prop5 | theorem6 |
                       // corollary7 | corollary8 | theorem9 | prop10 | remark
    std::map<std::string, std::string> params;
    int line = 0;
};

// Parsed session: ring, named ideals and modules, and the task list.
struct Session {
    RingPtr ring;
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::vector<std::pair<std::string, FPModule>> modules;
    std::vector<SessionTask> tasks;

    const Ideal* find_ideal(const std::string& name) const;
    const FPModule* find_module(const std::string& name) const;
};

class SessionError : public std::runtime_error {
public:
    SessionError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

struct RunOptions {
    std::optional<std::int64_t> characteristic;   // overrides the session file
    std::optional<std::vector<std::string>> priority;  // variable priority by name
    std::optional<int> budget;
    std::optional<int> max_degree;
    std::string out_dir = ".";
    int threads = 1;
};

// Parses a session text. Definitions must precede use; every polynomial input
// must be homogeneous. Throws SessionError with a position on bad input.
Session parse_session(const std::string& text, const RunOptions& options);

// exit status: 0 clean, 1 task error, 2 parse error, 3 a check was REFUTED
int run_session_file(const std::string& path, const RunOptions& options);

// human-readable rendering of a report file produced by a session run
std::string explain_report_file(const std::string& path);

}  // namespace torhilb
