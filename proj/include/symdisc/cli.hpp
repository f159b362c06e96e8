/*
 * cli.hpp
 * -------
 * Command surface of the tool: job description, runner, and the exact
 * input parsers.  Kept apart from the binary so tests can drive jobs
 * in-process and compare emitted documents byte for byte.
 */
#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "symdisc/engine.hpp"

namespace symdisc {

struct JobSpec {
    std::string command;  // discriminant | closed-form | evaluate | verify |
                          // antisym | berwald-moor
    unsigned n = 0;
    unsigned r = 0;
    // Partition key ("2,1" or "21") -> rational string ("8/9").
    std::map<std::string, std::string> coefficients;
    bool symbolic = false;
    std::string format = "text";  // text | json
    unsigned long seed = 1;
    unsigned trials = 10;
    unsigned threads = 1;
    std::string variant = "product";  // closed-form r=3: product | b-form
};

// Load a JobSpec from a JSON document (the --input path contents, or a
// previously emitted JSON result, which embeds its spec).
JobSpec job_from_json(const std::string& text);

// Execute the job, writing the result document to `out` and error
// messages to `err`.  Returns the process exit code: 0 success, 2 parse
// error, 3 computation error.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

} // namespace symdisc
