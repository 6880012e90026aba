#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliquealpha {

/// Malformed graph file. Carries the offending line number (1-based, 0 when
/// the problem is not tied to a single line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::string path, int line)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + msg),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  int line_;
};

/// A clique count would not fit in 64 bits.
class CountOverflowError : public std::runtime_error {
 public:
  explicit CountOverflowError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// No positive constant satisfies the constraint chain at order s.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& msg, int s)
      : std::runtime_error(msg), s_(s) {}
  int order() const { return s_; }

 private:
  int s_;
};

/// Sparsification retry loop ran out of attempts. Carries the statistics of
/// the failed run so the caller can see how far off the regime the input is.
class SparsifyExhaustedError : public std::runtime_error {
 public:
  SparsifyExhaustedError(const std::string& msg, double p, int retries,
                         int last_sample_size, std::uint64_t last_clique_count)
      : std::runtime_error(msg),
        p_(p),
        retries_(retries),
        last_sample_size_(last_sample_size),
        last_clique_count_(last_clique_count) {}

  double probability() const { return p_; }
  int retries() const { return retries_; }
  int last_sample_size() const { return last_sample_size_; }
  std::uint64_t last_clique_count() const { return last_clique_count_; }

 private:
  double p_;
  int retries_;
  int last_sample_size_;
  std::uint64_t last_clique_count_;
};

}  // namespace cliquealpha
