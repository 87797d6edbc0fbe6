#ifndef CQ_CLI_HPP
#define CQ_CLI_HPP

#include "cq/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cq::cli {

enum ExitCode : int { kOk = 0, kParse = 1, kPrecondition = 2, kMismatch = 3 };

// Raised when two independent computations disagree.
class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    int code = kOk;
    io::Json doc;  // {"schema", "command", "status", "result" | "error"}
};

const std::vector<std::string>& commands();

// One job. input is the payload; options may hold "oracle", "strategy",
// "field", "dvr_max_order".
Outcome run_job(const std::string& command, const io::Json& input, const io::Json& options);

// A job document {"schema", "command", "input", "options"}.
Outcome run_document(const io::Json& job);

// {"schema", "jobs": [...]} -> {"schema", "results": [...]}; jobs run on up to
// `threads` workers, results keep input order. Code is the largest job code.
Outcome run_batch(const io::Json& batch, unsigned threads);

// Reads CQ_DVR_MAX_ORDER.
std::optional<std::size_t> dvr_cap_from_env();

} // namespace cq::cli

#endif
