#ifndef JPAST_ERROR_HPP
#define JPAST_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jpast {

/// Base of every error the toolkit throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input text outside the accepted alphabet or shape.
class RejectedInput : public Error {
public:
  RejectedInput(const std::string& what, char32_t codepoint = 0,
                std::size_t index = 0)
      : Error(what), codepoint_(codepoint), index_(index) {}

  char32_t codepoint() const noexcept { return codepoint_; }
  std::size_t index() const noexcept { return index_; }

private:
  char32_t codepoint_;
  std::size_t index_;
};

/// A lemma whose final mora is illegal for the requested verb type.
class RuleDomainError : public Error {
public:
  using Error::Error;
};

/// No classification rule matches a (lemma, past) pair.
class UnclassifiableError : public Error {
public:
  UnclassifiableError(std::string lemma, std::string past, std::string diagnosis)
      : Error("cannot classify (" + lemma + ", " + past + "): " + diagnosis),
        lemma_(std::move(lemma)), past_(std::move(past)), diagnosis_(std::move(diagnosis)) {}

  const std::string& lemma() const noexcept { return lemma_; }
  const std::string& past() const noexcept { return past_; }
  const std::string& diagnosis() const noexcept { return diagnosis_; }

private:
  std::string lemma_;
  std::string past_;
  std::string diagnosis_;
};

/// Malformed line in a TSV stream. Line numbers are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class ValidationError : public Error {
public:
  ValidationError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class GenerationError : public Error {
public:
  using Error::Error;
};

/// Prediction file does not join 1:1 against the gold set.
class JoinError : public Error {
public:
  JoinError(std::vector<std::string> missing, std::vector<std::string> extra,
            std::vector<std::string> duplicate)
      : Error(render(missing, extra, duplicate)), missing_(std::move(missing)),
        extra_(std::move(extra)), duplicate_(std::move(duplicate)) {}

  const std::vector<std::string>& missing() const noexcept { return missing_; }
  const std::vector<std::string>& extra() const noexcept { return extra_; }
  const std::vector<std::string>& duplicate() const noexcept { return duplicate_; }

private:
  static std::string render(const std::vector<std::string>& missing,
                            const std::vector<std::string>& extra,
                            const std::vector<std::string>& duplicate) {
    std::string out = "prediction join failed";
    auto list = [&out](const char* label, const std::vector<std::string>& xs) {
      if (xs.empty()) return;
      out += "; ";
      out += label;
      out += ":";
      for (const auto& x : xs) {
        out += ' ';
        out += x;
      }
    };
    list("missing", missing);
    list("extra", extra);
    list("duplicate", duplicate);
    return out;
  }

  std::vector<std::string> missing_;
  std::vector<std::string> extra_;
  std::vector<std::string> duplicate_;
};

/// A caller broke an operation's precondition.
class ContractViolation : public Error {
public:
  using Error::Error;
};

}  // namespace jpast

#endif  // JPAST_ERROR_HPP
