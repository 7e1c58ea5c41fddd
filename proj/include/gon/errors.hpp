#ifndef GON_ERRORS_HPP
#define GON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gon {

/** Base class for all errors raised by this library. */
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/** A caller broke a documented precondition (dimension mismatch, invalid mu, ...). */
class contract_error : public error {
  public:
    using error::error;
};

/** An operation requiring a full-dimensional body was given a degenerate one. */
class degenerate_body_error : public error {
  public:
    using error::error;
};

/** Exact volume (and the checks built on it) only exist up to dimension 3. */
class unsupported_dimension_error : public error {
  public:
    using error::error;
};

/** An enumeration exceeded its hard cap; the cap is reported in the message. */
class resource_limit_error : public error {
  public:
    using error::error;
};

/** reduce_to_span was called on a body containing no lattice points. */
class empty_intersection_error : public error {
  public:
    using error::error;
};

/** Random instance generation exhausted its rejection budget. */
class generation_error : public error {
  public:
    using error::error;
};

/** Structured-text input did not parse; line() is 1-based, 0 when unknown. */
class parse_error : public error {
  public:
    explicit parse_error(const std::string& what) : error(what), line_(0) {}
    parse_error(const std::string& what, int line)
        : error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/** The squeeze demonstrator was given an inner polygon not contained in the outer one. */
class containment_error : public error {
  public:
    using error::error;
};

/**
 * A certified bound was violated by an exact count.  This would falsify a
 * published theorem on the tested instance, so it aborts the run; dump()
 * carries a serialized counterexample.
 */
class bound_violation_error : public error {
  public:
    bound_violation_error(const std::string& what, std::string dump)
        : error(what), dump_(std::move(dump)) {}
    const std::string& dump() const { return dump_; }

  private:
    std::string dump_;
};

/**
 * An interval comparison stayed undecided after escalating precision to the
 * hard floor.  Never silent: callers either report the verdict or abort.
 */
class indeterminate_error : public error {
  public:
    using error::error;
};

}  // namespace gon

#endif
