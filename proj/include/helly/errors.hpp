#ifndef HELLY_ERRORS_HPP
#define HELLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace helly {

// Thrown when an input exceeds one of the desk-scale caps. The message names
// the cap so callers can raise it via configuration.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the inductive slab construction exhausts its retry budget.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an optimum is requested over an empty polyhedron (kept distinct
// from the unbounded outcome, which is an ordinary result).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helly

#endif
