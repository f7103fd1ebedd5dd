#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercross::cli {

/// Malformed command-line input; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "1,2.5,-3e-2" into a vector. Whitespace around components is
/// ignored; an empty or non-numeric component is reported by position.
Eigen::VectorXd parse_vector(const std::string& text);

/// %.{precision}g, with negative zero printed as 0.
std::string format_number(double x, int precision);

/// Runs one command. `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercross::cli
